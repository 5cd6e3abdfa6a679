//! Reporter-abbreviation lexicon used by citation detection and by the
//! sentence segmenter's abbreviation guards.
//!
//! The built-in list covers the federal reporters, the regional reporters,
//! every state reporter, and the common nominative and court-specific
//! series. Lookups are dot-insensitive so that tokens still match after
//! abbreviation normalization has stripped full stops ("Ed." and "Ed"
//! both hit the same entry).

use std::collections::HashSet;
use std::io::BufRead;
use std::path::Path;

use crate::error::{Error, Result};

/// Individual tokens that occur inside volume-reporter-page citations.
/// Multi-word reporters ("Pa. Superior Ct.") are represented by their
/// component tokens.
const BUILTIN_TOKENS: &[&str] = &[
    // United States Supreme Court and early nominative reporters.
    "U.S.", "S.Ct.", "L.Ed.", "L.Ed.2d", "Dall.", "Cranch", "Wheat.", "Pet.", "How.", "Black",
    "Wall.", "Otto", "Law.", "U.S.L.W.",
    // Federal courts.
    "F.", "F.2d", "F.3d", "F.4th", "Supp.", "F.Supp.", "F.Supp.2d", "F.Supp.3d", "F.R.D.",
    "Fed.", "Cl.", "B.R.", "T.C.", "M.J.", "C.M.A.", "C.M.R.", "Vet.", "App.", "Cir.",
    "C.C.A.", "Bankr.", "Fed.Cl.", "Ct.Cl.", "Cust.", "C.C.P.A.", "Int'l", "Trade",
    // Regional reporters.
    "A.", "A.2d", "A.3d", "P.", "P.2d", "P.3d", "N.E.", "N.E.2d", "N.E.3d", "N.W.", "N.W.2d",
    "S.E.", "S.E.2d", "S.W.", "S.W.2d", "S.W.3d", "So.", "So.2d", "So.3d",
    // Single-letter components of spaced regional forms ("S. W.", "S. E.").
    "E.", "W.", "N.", "S.", "L.",
    // State reporters.
    "Ala.", "Alaska", "Ariz.", "Ark.", "Cal.", "Cal.2d", "Cal.3d", "Cal.4th", "Cal.5th",
    "Rptr.", "Cal.Rptr.", "Cal.Rptr.2d", "Cal.Rptr.3d", "Colo.", "Conn.", "Del.", "Fla.",
    "Ga.", "Haw.", "Idaho", "Ill.", "Ill.2d", "Ind.", "Iowa", "Kan.", "Ky.", "La.", "Me.",
    "Md.", "Mass.", "Mich.", "Minn.", "Miss.", "Mo.", "Mont.", "Neb.", "Nev.", "N.H.",
    "N.J.", "N.M.", "N.Y.", "N.Y.2d", "N.Y.3d", "N.Y.S.", "N.Y.S.2d", "N.Y.S.3d", "N.C.",
    "N.D.", "Ohio", "Okla.", "Or.", "Pa.", "R.I.", "S.C.", "S.D.", "Tenn.", "Tex.", "Utah",
    "Vt.", "Va.", "Wash.", "Wash.2d", "W.Va.", "Wis.", "Wis.2d", "Wyo.",
    // Territorial reporters.
    "N.Mar.I.", "Guam", "P.R.", "P.R.R.", "V.I.", "Am.Samoa",
    // Court-designation tokens that appear inside reporter names.
    "Ct.", "Sup.", "Super.", "Superior", "Commw.", "Cmwlth.", "Civ.", "Crim.", "Cr.",
    "Div.", "Dep't", "Dept.", "Gen.", "Spec.", "Terr.", "Mun.", "Co.Ct.", "Fam.", "Surr.",
    "Prob.", "Orphans'", "Chanc.", "Ch.", "Eq.", "Err.", "Term",
    // New York and intermediate appellate series.
    "Misc.", "Misc.2d", "Misc.3d", "A.D.", "A.D.2d", "A.D.3d", "Hun", "Barb.", "Wend.",
    "Johns.", "Cow.", "Denio", "Hill", "Lans.", "Paige", "Keyes", "Abb.", "How.Pr.",
    "Daly", "Duer", "Bosw.", "Sandf.", "Edm.", "Redf.", "Bradf.",
    // Massachusetts nominatives.
    "Allen", "Cush.", "Gray", "Metc.", "Pick.", "Tyng",
    // Pennsylvania nominatives and series.
    "Binn.", "Rawle", "Serg.", "Watts", "Whart.", "Yeates", "Pa.Super.", "Pa.Cmwlth.",
    "Pa.D.", "Pa.C.C.",
    // Virginia and Kentucky nominatives.
    "Call", "Dana", "Duv.", "Gratt.", "Hen.", "Munf.", "Rand.", "Leigh", "Litt.", "Bibb",
    "Bush", "Metcalfe", "Mart.", "Rob.", "Va.App.",
    // Other state nominatives and miscellany.
    "Aik.", "Add.", "Blackf.", "Brev.", "Cai.", "Day", "Doug.", "Greene", "Har.", "Harr.",
    "Hawks", "Hayw.", "Head", "Heisk.", "Humph.", "Ired.", "Jones", "Lea", "McCord",
    "Meigs", "Murph.", "Nott", "Overt.", "Port.", "Rice", "Rich.", "Root", "Sneed",
    "Speers", "Stew.", "Strob.", "Swan", "Taylor", "Vroom", "Yerg.", "Zab.",
    // Ohio, Illinois, and app-court series tokens.
    "Ohio.St.", "Ohio.St.2d", "Ohio.St.3d", "St.", "Ill.App.", "Ill.App.2d", "Ill.App.3d",
    "Ill.Dec.", "Ohio.App.", "Ohio.Op.", "N.E.2d.Ohio",
    // Statutes-adjacent tokens that show up in parallel cites.
    "Stat.", "U.S.C.", "C.F.R.", "Comp.", "Laws", "Rev.", "Code", "Ann.",
    // English reporters occasionally cited in older opinions.
    "Eng.", "Rep.", "Q.B.", "K.B.", "Ch.D.", "A.C.", "All", "E.R.", "W.L.R.",
];

/// Dot-insensitive set of reporter tokens.
#[derive(Debug, Clone)]
pub struct ReporterLexicon {
    tokens: HashSet<String>,
}

fn fold(token: &str) -> String {
    token.chars().filter(|c| *c != '.').collect()
}

impl ReporterLexicon {
    /// Lexicon with the built-in token list.
    pub fn builtin() -> Self {
        Self::from_tokens(BUILTIN_TOKENS.iter().copied())
    }

    pub fn from_tokens<'a>(tokens: impl IntoIterator<Item = &'a str>) -> Self {
        let tokens = tokens
            .into_iter()
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(fold)
            .collect();
        Self { tokens }
    }

    /// Load a lexicon from a one-token-per-line file. Blank lines and lines
    /// starting with `#` are skipped.
    pub fn from_file(path: &Path) -> Result<Self> {
        let file = std::fs::File::open(path).map_err(|e| Error::SourceUnreadable {
            path: path.display().to_string(),
            reason: e.to_string(),
        })?;
        let mut tokens = Vec::new();
        for line in std::io::BufReader::new(file).lines() {
            let line = line?;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            tokens.push(line.to_string());
        }
        Ok(Self::from_tokens(tokens.iter().map(String::as_str)))
    }

    /// True when `token` (with or without dots, trailing commas stripped)
    /// names a known reporter component.
    pub fn contains(&self, token: &str) -> bool {
        let trimmed = token.trim_end_matches([',', ';', ':']);
        self.tokens.contains(&fold(trimmed))
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }
}

impl Default for ReporterLexicon {
    fn default() -> Self {
        Self::builtin()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_covers_common_reporters() {
        let lex = ReporterLexicon::builtin();
        for token in ["Pa.", "Ct.", "R.I.", "A.2d", "Ky.", "Ga.", "Wis.", "N.W.2d", "U.S."] {
            assert!(lex.contains(token), "missing {token}");
        }
    }

    #[test]
    fn lookup_is_dot_insensitive() {
        let lex = ReporterLexicon::builtin();
        assert!(lex.contains("Ed"));
        assert!(lex.contains("Ed."));
        assert!(lex.contains("A2d"));
        assert!(lex.contains("Pa.,"));
        assert!(!lex.contains("Banana"));
    }

    #[test]
    fn builtin_size_is_in_expected_range() {
        let lex = ReporterLexicon::builtin();
        assert!(lex.len() >= 200, "lexicon too small: {}", lex.len());
    }

    #[test]
    fn file_loader_skips_comments() {
        let dir = std::env::temp_dir().join("citeworthy-lexicon-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("reporters.txt");
        std::fs::write(&path, "# comment\nXyz.\n\nQrs.\n").unwrap();
        let lex = ReporterLexicon::from_file(&path).unwrap();
        assert!(lex.contains("Xyz."));
        assert!(lex.contains("Qrs"));
        assert_eq!(lex.len(), 2);
    }
}
