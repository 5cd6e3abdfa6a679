//! Citation span detection and placeholder masking.
//!
//! Two citation shapes are recognized. A *versus* citation names both
//! parties (`State v. Camerlin, 117 R.I. 61, 362 A.2d 759 (1976)`) and is
//! matched by scanning party-name tokens on both sides of the versus token,
//! then extending rightward over any reporter citation, pin cites, and
//! parenthetical court/year that follow. A *reporter* citation is the
//! volume / reporter-abbreviation / page triple itself (`77 A. 2d 706`),
//! matched by a small grammar validated against the reporter lexicon.
//! Exact occurrences of metadata citation strings are matched first and the
//! grammar fills the gaps.
//!
//! Detected spans are replaced by the literal placeholder
//! [`CITATION_PLACEHOLDER`], and a masked sentence consisting of nothing
//! but placeholders (optionally prefixed by "See"/"eg", with one trailing
//! terminal mark) is flagged citation-only.

use std::sync::Arc;
use std::sync::LazyLock;

use regex::Regex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::reporters::ReporterLexicon;

/// Literal token substituted for every detected citation span.
pub const CITATION_PLACEHOLDER: &str = "[CITATION_SPAN]";

/// Which grammar produced a span.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpanKind {
    Versus,
    Reporter,
}

/// One detected citation occurrence, as byte offsets into the sentence.
#[derive(Debug, Clone, PartialEq)]
pub struct CitationSpan {
    pub start: usize,
    pub end: usize,
    pub kind: SpanKind,
    pub raw: String,
}

/// A sentence after citation detection and masking.
#[derive(Debug, Clone)]
pub struct ProcessedSentence {
    pub original: String,
    pub masked: String,
    pub spans: Vec<CitationSpan>,
    pub contains_inline_citation: bool,
    pub is_citation_only: bool,
}

static CITATION_ONLY: LazyLock<Regex> = LazyLock::new(|| {
    Regex::new(r"^(?:See)?(?:\s)?(?:eg)?(?:\s)?(?:\[CITATION_SPAN\]\s?)+[.;]?$").unwrap()
});

/// Words never treated as the leading token of a party name.
const PARTY_STOPWORDS: &[&str] = &[
    "See", "In", "Cf", "Compare", "Accord", "Contra", "But", "Eg", "Citing", "Quoting", "Also",
    "And", "Or", "At",
];

/// Connectors allowed between party-name tokens, per the versus grammar.
const PARTY_CONNECTORS: &[&str] = &["of", "and", "&"];

#[derive(Debug, Clone, Copy, PartialEq)]
enum PartyTok {
    /// Capitalized name token; `trailing_stop` marks `.,;:!?` after it.
    Word { dotted: bool, trailing_stop: bool },
    /// Long capitalized word ending in a period ("Georgia."): the period is
    /// sentence punctuation, not an abbreviation dot.
    WordWithStop,
    Connector,
    Other,
}

fn classify_party_token(tok: &str) -> (PartyTok, usize) {
    // Returns the classification plus the core length in bytes (without
    // trailing punctuation, but including an abbreviation dot).
    let trailing: &[char] = &[',', ';', ':', '!', '?', ')', ']', '"', '\'', '\u{2019}'];
    let core = tok.trim_end_matches(trailing);
    let trailing_stop = core.len() != tok.len();
    if core.is_empty() {
        return (PartyTok::Other, 0);
    }
    if PARTY_CONNECTORS.contains(&core) {
        return (PartyTok::Connector, core.len());
    }
    let mut chars = core.chars();
    let first = chars.next().unwrap();
    if !first.is_ascii_uppercase() {
        return (PartyTok::Other, 0);
    }
    let is_name_char = |c: char| c.is_ascii_alphabetic() || matches!(c, '\'' | '\u{2019}' | '-');
    if let Some(body) = core.strip_suffix('.') {
        let inner = &body[1..];
        if inner.chars().all(is_name_char) {
            if body.len() <= 4 {
                // Short dotted token: abbreviation dot belongs to the name
                // ("Ind.", "Univ.", "Co.", "A.").
                return (PartyTok::Word { dotted: true, trailing_stop }, core.len());
            }
            // Long word followed by a period reads as a sentence stop.
            return (PartyTok::WordWithStop, body.len());
        }
        return (PartyTok::Other, 0);
    }
    if core[1..].chars().all(is_name_char) {
        return (PartyTok::Word { dotted: false, trailing_stop }, core.len());
    }
    (PartyTok::Other, 0)
}

fn tokenize(text: &str) -> Vec<(usize, usize)> {
    let mut tokens = Vec::new();
    let mut start = None;
    for (i, c) in text.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                tokens.push((s, i));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        tokens.push((s, text.len()));
    }
    tokens
}

/// Citation detector with a shared reporter lexicon.
#[derive(Debug, Clone)]
pub struct CitationEngine {
    lexicon: Arc<ReporterLexicon>,
    versus_tokens: Vec<&'static str>,
}

impl Default for CitationEngine {
    fn default() -> Self {
        Self::new(ReporterLexicon::builtin())
    }
}

impl CitationEngine {
    pub fn new(lexicon: ReporterLexicon) -> Self {
        Self { lexicon: Arc::new(lexicon), versus_tokens: vec!["v."] }
    }

    /// Also accept "vs." and "vs" as the versus token. Off by default.
    pub fn with_extended_versus_tokens(mut self) -> Self {
        self.versus_tokens = vec!["v.", "vs.", "vs"];
        self
    }

    pub fn lexicon(&self) -> &ReporterLexicon {
        &self.lexicon
    }

    /// Detect versus-type citation spans: party names on both sides of the
    /// versus token, extended over any trailing reporter cite, pin cites,
    /// and parenthetical year.
    pub fn detect_versus(&self, sentence: &str) -> Vec<CitationSpan> {
        let tokens = tokenize(sentence);
        let mut spans: Vec<CitationSpan> = Vec::new();
        for (idx, &(ts, te)) in tokens.iter().enumerate() {
            let tok = &sentence[ts..te];
            if !self.versus_tokens.contains(&tok) {
                continue;
            }
            if spans.last().is_some_and(|s| ts < s.end) {
                continue;
            }
            let Some(left_start) = self.scan_party_left(sentence, &tokens, idx) else {
                continue;
            };
            let Some(right_end) = self.scan_party_right(sentence, &tokens, idx) else {
                continue;
            };
            let end = self.extend_citation(sentence, right_end);
            spans.push(CitationSpan {
                start: left_start,
                end,
                kind: SpanKind::Versus,
                raw: sentence[left_start..end].to_string(),
            });
        }
        spans
    }

    fn scan_party_left(
        &self,
        text: &str,
        tokens: &[(usize, usize)],
        versus_idx: usize,
    ) -> Option<usize> {
        let mut kept: Vec<usize> = Vec::new();
        for i in (0..versus_idx).rev() {
            let (ts, te) = tokens[i];
            let tok = &text[ts..te];
            let (kind, _) = classify_party_token(tok);
            match kind {
                PartyTok::Word { trailing_stop, .. } => {
                    // Trailing punctuation on a non-adjacent token means the
                    // token closes an earlier clause.
                    if trailing_stop && i + 1 != versus_idx {
                        break;
                    }
                    kept.push(i);
                }
                PartyTok::Connector => {
                    if kept.is_empty() {
                        break;
                    }
                    kept.push(i);
                }
                PartyTok::WordWithStop | PartyTok::Other => break,
            }
        }
        // kept is in right-to-left order; trim connectors and stopwords off
        // the left edge.
        while let Some(&i) = kept.last() {
            let (ts, te) = tokens[i];
            let tok = text[ts..te]
                .trim_start_matches(['(', '[', '"', '\'', '\u{2018}', '\u{201C}'])
                .trim_end_matches(['.', ',']);
            let (kind, _) = classify_party_token(&text[ts..te]);
            if kind == PartyTok::Connector || PARTY_STOPWORDS.contains(&tok) {
                kept.pop();
            } else {
                break;
            }
        }
        let &first = kept.last()?;
        let (ts, te) = tokens[first];
        let tok = &text[ts..te];
        let skip = tok.len() - tok.trim_start_matches(['(', '[', '"', '\'', '\u{2018}', '\u{201C}']).len();
        Some(ts + skip)
    }

    fn scan_party_right(
        &self,
        text: &str,
        tokens: &[(usize, usize)],
        versus_idx: usize,
    ) -> Option<usize> {
        let mut end: Option<usize> = None;
        let mut last_was_connector = false;
        for i in versus_idx + 1..tokens.len() {
            let (ts, te) = tokens[i];
            let tok = &text[ts..te];
            let (kind, core_len) = classify_party_token(tok);
            match kind {
                PartyTok::Word { trailing_stop, .. } => {
                    end = Some(ts + core_len);
                    last_was_connector = false;
                    if trailing_stop {
                        break;
                    }
                }
                PartyTok::WordWithStop => {
                    end = Some(ts + core_len);
                    last_was_connector = false;
                    break;
                }
                PartyTok::Connector => {
                    if end.is_none() {
                        return None;
                    }
                    last_was_connector = true;
                }
                PartyTok::Other => break,
            }
        }
        // A trailing connector is not part of the name; the span already
        // ends at the last real token, so nothing to undo.
        let _ = last_was_connector;
        end
    }

    /// Consume reporter cites, pin cites, and parenthetical groups that
    /// directly follow a citation, returning the new end offset.
    fn extend_citation(&self, text: &str, mut end: usize) -> usize {
        loop {
            let rest = &text[end..];
            // , 168 Pa. Superior Ct. 351   (a chained or parallel cite)
            let mut probe = 0;
            if rest[probe..].starts_with(',') {
                probe += 1;
            }
            probe += ws_len(&rest[probe..]);
            if probe < rest.len() {
                if let Some(len) = self.match_reporter_core(&rest[probe..]) {
                    end += probe + len;
                    continue;
                }
            }
            // , 299   (pin cite)
            if let Some(len) = match_pin_cite(rest) {
                end += len;
                continue;
            }
            // (1976) / (Ct. App. 1992) / (452 SE2d 767)
            if let Some(len) = self.match_parenthetical(rest) {
                end += len;
                continue;
            }
            break;
        }
        end
    }

    fn match_parenthetical(&self, rest: &str) -> Option<usize> {
        let ws = ws_len(rest);
        let after = &rest[ws..];
        if !after.starts_with('(') {
            return None;
        }
        let close = after.find(')')?;
        if close > 80 {
            return None;
        }
        let content = &after[1..close];
        if content.contains('(') || content.is_empty() {
            return None;
        }
        let ok = is_all_digits(content, 1, 4)
            || is_court_year(content)
            || self
                .match_reporter_core(content)
                .is_some_and(|len| len == content.len());
        if ok {
            Some(ws + close + 1)
        } else {
            None
        }
    }

    /// Match a volume / reporter-tokens / page citation anchored at the
    /// start of `text`. Returns the matched byte length.
    fn match_reporter_core(&self, text: &str) -> Option<usize> {
        let tokens = tokenize(text);
        let (vs, ve) = *tokens.first()?;
        if vs != 0 {
            return None;
        }
        let volume = &text[vs..ve];
        if !is_all_digits(volume, 1, 4) {
            return None;
        }
        let mut reporter_tokens: Vec<&str> = Vec::new();
        for &(ts, te) in tokens.iter().skip(1).take(6) {
            let tok = &text[ts..te];
            let core = tok.trim_end_matches([',', ';', ':', ')', ']']);
            let digits = core.trim_end_matches('.');
            if is_all_digits(digits, 1, 5) && !reporter_tokens.is_empty() {
                // Page number: end of the core citation.
                if !self.reporter_tokens_plausible(&reporter_tokens) {
                    return None;
                }
                return Some(ts + digits.len());
            }
            if reporter_tokens.len() == 5 || !is_reporter_token(core) {
                return None;
            }
            if core.len() != tok.len() {
                // Reporter token carried trailing punctuation; a page must
                // still follow, so the citation is malformed here.
                return None;
            }
            reporter_tokens.push(core);
        }
        None
    }

    fn reporter_tokens_plausible(&self, tokens: &[&str]) -> bool {
        if tokens.iter().any(|t| self.lexicon.contains(t)) {
            return true;
        }
        // Structural fallback: dotted abbreviations or series forms
        // between the two numbers ("452 SE2d 767").
        tokens.iter().any(|t| t.contains('.') || is_series_form(t) || is_ordinal(t))
    }

    /// Detect reporter-type citation spans. Exact matches of metadata
    /// citation strings are found first; the grammar fills the gaps.
    pub fn detect_reporter(&self, sentence: &str, metadata_citations: &[String]) -> Vec<CitationSpan> {
        let mut spans: Vec<CitationSpan> = Vec::new();
        for cite in metadata_citations {
            let needle = cite.trim();
            if needle.len() < 4 {
                continue;
            }
            for (at, _) in sentence.match_indices(needle) {
                let before_ok = sentence[..at].chars().next_back().is_none_or(|c| !c.is_alphanumeric());
                let after_ok = sentence[at + needle.len()..].chars().next().is_none_or(|c| !c.is_alphanumeric());
                if before_ok && after_ok {
                    spans.push(CitationSpan {
                        start: at,
                        end: at + needle.len(),
                        kind: SpanKind::Reporter,
                        raw: needle.to_string(),
                    });
                }
            }
        }
        let tokens = tokenize(sentence);
        let mut pos = 0;
        for &(ts, te) in &tokens {
            if ts < pos {
                continue;
            }
            let tok = &sentence[ts..te];
            if !is_all_digits(tok.trim_end_matches([',', ';']), 1, 4) || !is_all_digits(tok, 1, 4) {
                continue;
            }
            if let Some(len) = self.match_reporter_core(&sentence[ts..]) {
                let end = self.extend_citation(sentence, ts + len);
                spans.push(CitationSpan {
                    start: ts,
                    end,
                    kind: SpanKind::Reporter,
                    raw: sentence[ts..end].to_string(),
                });
                pos = end;
            }
        }
        merge_spans(spans)
    }

    /// Run both detectors plus metadata matching and mask the result.
    pub fn process(&self, sentence: &str, metadata_citations: &[String]) -> ProcessedSentence {
        let mut spans = self.detect_versus(sentence);
        spans.extend(self.detect_reporter(sentence, metadata_citations));
        mask_citations(sentence, spans).expect("detected spans are in bounds")
    }
}

fn ws_len(s: &str) -> usize {
    s.len() - s.trim_start().len()
}

fn is_all_digits(s: &str, min: usize, max: usize) -> bool {
    s.len() >= min && s.len() <= max && s.bytes().all(|b| b.is_ascii_digit())
}

fn is_ordinal(s: &str) -> bool {
    let Some(rest) = s.strip_suffix("th").or_else(|| s.strip_suffix("st")).or_else(|| s.strip_suffix("nd")).or_else(|| s.strip_suffix("rd")).or_else(|| s.strip_suffix('d')) else {
        return false;
    };
    is_all_digits(rest, 1, 2)
}

/// Compact reporter series like "SE2d", "NW2d", "F3d".
fn is_series_form(s: &str) -> bool {
    let letters: String = s.chars().take_while(|c| c.is_ascii_uppercase()).collect();
    if letters.is_empty() || letters.len() > 4 {
        return false;
    }
    is_ordinal(&s[letters.len()..])
}

/// Tokens permitted between the volume and page of a reporter citation.
fn is_reporter_token(tok: &str) -> bool {
    if is_ordinal(tok) {
        return true;
    }
    let mut chars = tok.chars();
    match chars.next() {
        Some(c) if c.is_ascii_uppercase() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || matches!(c, '.' | '\'' | '\u{2019}' | '&' | '-'))
}

fn is_court_year(content: &str) -> bool {
    let trimmed = content.trim_end();
    if trimmed.len() < 4 {
        return false;
    }
    let (head, year) = trimmed.split_at(trimmed.len() - 4);
    is_all_digits(year, 4, 4)
        && head
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || matches!(c, '.' | ',' | '\'' | '\u{2019}' | '&' | ' ' | '-'))
}

fn match_pin_cite(rest: &str) -> Option<usize> {
    let mut probe = rest.strip_prefix(',')?;
    let ws = ws_len(probe);
    probe = &probe[ws..];
    let digits: String = probe.chars().take_while(|c| c.is_ascii_digit()).collect();
    if digits.is_empty() || digits.len() > 5 {
        return None;
    }
    let after = &probe[digits.len()..];
    if after.chars().next().is_some_and(|c| c.is_alphanumeric()) {
        return None;
    }
    Some(1 + ws + digits.len())
}

/// Merge overlapping or touching spans; versus wins over reporter when
/// spans coincide.
pub fn merge_spans(mut spans: Vec<CitationSpan>) -> Vec<CitationSpan> {
    if spans.is_empty() {
        return spans;
    }
    spans.sort_by_key(|s| (s.start, std::cmp::Reverse(s.end)));
    let mut merged: Vec<CitationSpan> = Vec::with_capacity(spans.len());
    for span in spans {
        match merged.last_mut() {
            Some(last) if span.start <= last.end => {
                if span.end > last.end {
                    last.end = span.end;
                }
                if span.kind == SpanKind::Versus {
                    last.kind = SpanKind::Versus;
                }
            }
            _ => merged.push(span),
        }
    }
    merged
}

/// Replace each span with the placeholder token and compute the two
/// citation flags. Spans may arrive unsorted; overlapping or touching
/// spans are merged first.
pub fn mask_citations(sentence: &str, spans: Vec<CitationSpan>) -> Result<ProcessedSentence> {
    for span in &spans {
        if span.start >= span.end
            || span.end > sentence.len()
            || !sentence.is_char_boundary(span.start)
            || !sentence.is_char_boundary(span.end)
        {
            return Err(Error::SpanOutOfBounds {
                start: span.start,
                end: span.end,
                len: sentence.len(),
            });
        }
    }
    let mut merged = merge_spans(spans);
    for span in &mut merged {
        span.raw = sentence[span.start..span.end].to_string();
    }
    let mut masked = String::with_capacity(sentence.len());
    let mut cursor = 0;
    for span in &merged {
        masked.push_str(&sentence[cursor..span.start]);
        masked.push_str(CITATION_PLACEHOLDER);
        cursor = span.end;
    }
    masked.push_str(&sentence[cursor..]);
    let contains_inline_citation = !merged.is_empty();
    let is_citation_only = contains_inline_citation && is_citation_only(&masked);
    Ok(ProcessedSentence {
        original: sentence.to_string(),
        masked,
        spans: merged,
        contains_inline_citation,
        is_citation_only,
    })
}

/// True iff the masked sentence is nothing but placeholders, optionally
/// prefixed by "See"/"eg" and closed by a single terminal mark.
pub fn is_citation_only(masked: &str) -> bool {
    CITATION_ONLY.is_match(masked)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn engine() -> CitationEngine {
        CitationEngine::default()
    }

    #[test]
    fn versus_with_reporter_and_year_covers_whole_citation() {
        let s = "State v. Camerlin, 117 R.I. 61, 362 A.2d 759 (1976)";
        let spans = engine().detect_versus(s);
        assert_eq!(spans.len(), 1);
        assert_eq!(&s[spans[0].start..spans[0].end], s);
    }

    #[test]
    fn versus_span_stops_before_trailing_period() {
        let s = "Lacy v. East Broad Top Railroad and Coal Co., 168 Pa. Superior Ct. 351, 77 A. 2d 706.";
        let spans = engine().detect_versus(s);
        assert_eq!(spans.len(), 1);
        assert_eq!(
            &s[spans[0].start..spans[0].end],
            "Lacy v. East Broad Top Railroad and Coal Co., 168 Pa. Superior Ct. 351, 77 A. 2d 706"
        );
    }

    #[test]
    fn prose_without_citations_yields_no_spans() {
        let sentences = [
            "This statute applies to alimony obligations created by verdict.",
            "However, while an exemption should be strictly construed, the construction must still be reasonable.",
            "This leaves absolutely indefinite and uncertain what the plaintiff was to receive.",
            "The appellant then was granted the right and did file amendments to its assignments of error.",
        ];
        let engine = engine();
        for s in sentences {
            assert!(engine.detect_versus(s).is_empty(), "versus FP on {s:?}");
            assert!(engine.detect_reporter(s, &[]).is_empty(), "reporter FP on {s:?}");
        }
    }

    #[test]
    fn parallel_reporter_cites_merge_into_one_span() {
        let s = "168 Pa. Superior Ct. 351, 77 A. 2d 706";
        let spans = engine().detect_reporter(s, &[]);
        assert_eq!(spans.len(), 1);
        assert_eq!(&s[spans[0].start..spans[0].end], s);
    }

    #[test]
    fn interstate_coal_union_covers_everything() {
        let s = "Interstate Coal Co. v. Trivett, 155 Ky. 825, 160 S. W. 728";
        let eng = engine();
        let versus = eng.detect_versus(s);
        assert_eq!(versus.len(), 1);
        assert_eq!(&s[versus[0].start..versus[0].end], s);
        let reporter = eng.detect_reporter(s, &[]);
        assert!(reporter.iter().any(|sp| s[sp.start..sp.end].contains("155 Ky. 825")));
    }

    #[test]
    fn bare_numbers_are_not_citations() {
        let spans = engine().detect_reporter("He was 42 years old in 1976.", &[]);
        assert!(spans.is_empty());
    }

    #[test]
    fn dotless_reporter_tokens_survive_normalization() {
        // After abbreviation normalization "77 A. 2d 706" becomes
        // "77 A 2d 706"; detection must still cover it.
        let s = "77 A 2d 706";
        let spans = engine().detect_reporter(s, &[]);
        assert_eq!(spans.len(), 1);
        assert_eq!(&s[spans[0].start..spans[0].end], s);
    }

    #[test]
    fn metadata_exact_match_is_found() {
        let s = "The court relied on 9 Foo Bar 12 for this point.";
        let spans = engine().detect_reporter(s, &["9 Foo Bar 12".to_string()]);
        assert_eq!(spans.len(), 1);
        assert_eq!(spans[0].raw, "9 Foo Bar 12");
    }

    #[test]
    fn see_prefix_stays_outside_the_span() {
        let s = "See Allen v. Allen, 265 Ga. 53 (1) (452 SE2d 767) (1995)";
        let processed = engine().process(s, &[]);
        assert_eq!(processed.masked, "See [CITATION_SPAN]");
        assert!(processed.is_citation_only);
    }

    #[test]
    fn trustees_masks_to_single_placeholder() {
        let s = "Trustees of Ind. Univ. v. Town of Rhine, 170 Wis. 2d 293, 299, 488 N.W.2d 128 (Ct. App. 1992).";
        let processed = engine().process(s, &[]);
        assert_eq!(processed.masked, "[CITATION_SPAN].");
        assert!(processed.is_citation_only);
    }

    #[test]
    fn leading_in_is_not_absorbed_but_cite_is_masked() {
        let s = "In Tanorio v. Superior Court, 1 N.Mar.I. 4, we determined under what conditions a writ of mandamus may issue.";
        let processed = engine().process(s, &[]);
        assert!(processed.masked.starts_with("In [CITATION_SPAN], we determined"));
        assert!(processed.contains_inline_citation);
        assert!(!processed.is_citation_only);
    }

    #[test]
    fn citation_only_regex_cases() {
        assert!(is_citation_only("See [CITATION_SPAN]"));
        assert!(is_citation_only("[CITATION_SPAN] [CITATION_SPAN]"));
        assert!(is_citation_only("[CITATION_SPAN]."));
        assert!(is_citation_only("[CITATION_SPAN];"));
        assert!(is_citation_only("See eg [CITATION_SPAN]"));
        assert!(!is_citation_only("The court relied on [CITATION_SPAN] heavily."));
        assert!(!is_citation_only("See"));
        assert!(!is_citation_only(""));
    }

    #[test]
    fn masking_a_masked_sentence_finds_nothing() {
        let eng = engine();
        let s = "See Allen v. Allen, 265 Ga. 53 (1) (452 SE2d 767) (1995)";
        let processed = eng.process(s, &[]);
        let again = eng.process(&processed.masked, &[]);
        assert!(again.spans.is_empty());
        assert_eq!(again.masked, processed.masked);
    }

    #[test]
    fn mask_rejects_out_of_bounds_spans() {
        let span = CitationSpan { start: 3, end: 99, kind: SpanKind::Reporter, raw: String::new() };
        let err = mask_citations("short", vec![span]).unwrap_err();
        assert!(matches!(err, Error::SpanOutOfBounds { .. }));
    }

    #[test]
    fn mask_with_no_spans_is_identity() {
        let p = mask_citations("Nothing here.", Vec::new()).unwrap();
        assert_eq!(p.masked, "Nothing here.");
        assert!(!p.contains_inline_citation);
        assert!(!p.is_citation_only);
    }

    #[test]
    fn placeholder_count_matches_merged_spans() {
        let s = "Compare Roe v. Wade, 410 U.S. 113 (1973), with Doe v. Bolton, 410 U.S. 179 (1973).";
        let processed = engine().process(s, &[]);
        let count = processed.masked.matches(CITATION_PLACEHOLDER).count();
        assert_eq!(count, processed.spans.len());
        assert_eq!(count, 2);
        assert!(processed.masked.contains(", with "));
    }
}
