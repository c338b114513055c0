//! Penn Treebank part-of-speech tagset.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Closed Penn Treebank tagset. Every token carries exactly one of these.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PosTag {
    /// Coordinating conjunction (and, or, but)
    #[serde(rename = "CC")]
    Cc,
    /// Cardinal number
    #[serde(rename = "CD")]
    Cd,
    /// Determiner
    #[serde(rename = "DT")]
    Dt,
    /// Existential there
    #[serde(rename = "EX")]
    Ex,
    /// Foreign word
    #[serde(rename = "FW")]
    Fw,
    /// Preposition or subordinating conjunction
    #[serde(rename = "IN")]
    In,
    /// Adjective
    #[serde(rename = "JJ")]
    Jj,
    /// Adjective, comparative
    #[serde(rename = "JJR")]
    Jjr,
    /// Adjective, superlative
    #[serde(rename = "JJS")]
    Jjs,
    /// List item marker
    #[serde(rename = "LS")]
    Ls,
    /// Modal
    #[serde(rename = "MD")]
    Md,
    /// Noun, singular or mass
    #[serde(rename = "NN")]
    Nn,
    /// Noun, plural
    #[serde(rename = "NNS")]
    Nns,
    /// Proper noun, singular
    #[serde(rename = "NNP")]
    Nnp,
    /// Proper noun, plural
    #[serde(rename = "NNPS")]
    Nnps,
    /// Predeterminer (all, both, half)
    #[serde(rename = "PDT")]
    Pdt,
    /// Possessive ending ('s)
    #[serde(rename = "POS")]
    Pos,
    /// Personal pronoun
    #[serde(rename = "PRP")]
    Prp,
    /// Possessive pronoun (my, your, their)
    #[serde(rename = "PRP$")]
    PrpPoss,
    /// Adverb
    #[serde(rename = "RB")]
    Rb,
    /// Adverb, comparative
    #[serde(rename = "RBR")]
    Rbr,
    /// Adverb, superlative
    #[serde(rename = "RBS")]
    Rbs,
    /// Particle (up in "give up")
    #[serde(rename = "RP")]
    Rp,
    /// Symbol
    #[serde(rename = "SYM")]
    Sym,
    /// to
    #[serde(rename = "TO")]
    To,
    /// Interjection
    #[serde(rename = "UH")]
    Uh,
    /// Verb, base form
    #[serde(rename = "VB")]
    Vb,
    /// Verb, past tense
    #[serde(rename = "VBD")]
    Vbd,
    /// Verb, gerund or present participle
    #[serde(rename = "VBG")]
    Vbg,
    /// Verb, past participle
    #[serde(rename = "VBN")]
    Vbn,
    /// Verb, non-3rd person singular present
    #[serde(rename = "VBP")]
    Vbp,
    /// Verb, 3rd person singular present
    #[serde(rename = "VBZ")]
    Vbz,
    /// WH-determiner (which)
    #[serde(rename = "WDT")]
    Wdt,
    /// WH-pronoun (who, what)
    #[serde(rename = "WP")]
    Wp,
    /// Possessive WH-pronoun (whose)
    #[serde(rename = "WP$")]
    WpPoss,
    /// WH-adverb (when, where, why, how)
    #[serde(rename = "WRB")]
    Wrb,
    /// Sentence-final punctuation (. ! ?)
    #[serde(rename = ".")]
    SentFinal,
    /// Comma
    #[serde(rename = ",")]
    Comma,
    /// Mid-sentence punctuation (: ; - ...)
    #[serde(rename = ":")]
    MidPunct,
    /// Opening bracket
    #[serde(rename = "(")]
    OpenParen,
    /// Closing bracket
    #[serde(rename = ")")]
    CloseParen,
    /// Quotation mark
    #[serde(rename = "''")]
    Quote,
    /// Currency sign
    #[serde(rename = "$")]
    Dollar,
}

impl PosTag {
    pub fn as_str(&self) -> &'static str {
        use PosTag::*;
        match self {
            Cc => "CC",
            Cd => "CD",
            Dt => "DT",
            Ex => "EX",
            Fw => "FW",
            In => "IN",
            Jj => "JJ",
            Jjr => "JJR",
            Jjs => "JJS",
            Ls => "LS",
            Md => "MD",
            Nn => "NN",
            Nns => "NNS",
            Nnp => "NNP",
            Nnps => "NNPS",
            Pdt => "PDT",
            Pos => "POS",
            Prp => "PRP",
            PrpPoss => "PRP$",
            Rb => "RB",
            Rbr => "RBR",
            Rbs => "RBS",
            Rp => "RP",
            Sym => "SYM",
            To => "TO",
            Uh => "UH",
            Vb => "VB",
            Vbd => "VBD",
            Vbg => "VBG",
            Vbn => "VBN",
            Vbp => "VBP",
            Vbz => "VBZ",
            Wdt => "WDT",
            Wp => "WP",
            WpPoss => "WP$",
            Wrb => "WRB",
            SentFinal => ".",
            Comma => ",",
            MidPunct => ":",
            OpenParen => "(",
            CloseParen => ")",
            Quote => "''",
            Dollar => "$",
        }
    }

    /// All tags, in declaration order. Tag-closure checks iterate this.
    pub fn all() -> &'static [PosTag] {
        use PosTag::*;
        &[
            Cc, Cd, Dt, Ex, Fw, In, Jj, Jjr, Jjs, Ls, Md, Nn, Nns, Nnp, Nnps, Pdt, Pos, Prp,
            PrpPoss, Rb, Rbr, Rbs, Rp, Sym, To, Uh, Vb, Vbd, Vbg, Vbn, Vbp, Vbz, Wdt, Wp, WpPoss,
            Wrb, SentFinal, Comma, MidPunct, OpenParen, CloseParen, Quote, Dollar,
        ]
    }

    pub fn is_noun(&self) -> bool {
        matches!(self, PosTag::Nn | PosTag::Nns | PosTag::Nnp | PosTag::Nnps)
    }

    pub fn is_verb(&self) -> bool {
        matches!(
            self,
            PosTag::Vb | PosTag::Vbd | PosTag::Vbg | PosTag::Vbn | PosTag::Vbp | PosTag::Vbz
        )
    }

    pub fn is_adjective(&self) -> bool {
        matches!(self, PosTag::Jj | PosTag::Jjr | PosTag::Jjs)
    }

    pub fn is_adverb(&self) -> bool {
        matches!(self, PosTag::Rb | PosTag::Rbr | PosTag::Rbs)
    }

    pub fn is_punct(&self) -> bool {
        matches!(
            self,
            PosTag::SentFinal
                | PosTag::Comma
                | PosTag::MidPunct
                | PosTag::OpenParen
                | PosTag::CloseParen
                | PosTag::Quote
                | PosTag::Sym
                | PosTag::Dollar
        )
    }

    /// Tags that can open a noun phrase. Used by context rules that separate
    /// prepositional from adverbial readings.
    pub fn starts_noun_phrase(&self) -> bool {
        matches!(
            self,
            PosTag::Dt
                | PosTag::Pdt
                | PosTag::PrpPoss
                | PosTag::Jj
                | PosTag::Jjr
                | PosTag::Jjs
                | PosTag::Cd
                | PosTag::Nn
                | PosTag::Nns
                | PosTag::Nnp
                | PosTag::Nnps
                | PosTag::Prp
        )
    }
}

impl fmt::Display for PosTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PosTag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        use PosTag::*;
        Ok(match s {
            "CC" => Cc,
            "CD" => Cd,
            "DT" => Dt,
            "EX" => Ex,
            "FW" => Fw,
            "IN" => In,
            "JJ" => Jj,
            "JJR" => Jjr,
            "JJS" => Jjs,
            "LS" => Ls,
            "MD" => Md,
            "NN" => Nn,
            "NNS" => Nns,
            "NNP" => Nnp,
            "NNPS" => Nnps,
            "PDT" => Pdt,
            "POS" => Pos,
            "PRP" => Prp,
            "PRP$" => PrpPoss,
            "RB" => Rb,
            "RBR" => Rbr,
            "RBS" => Rbs,
            "RP" => Rp,
            "SYM" => Sym,
            "TO" => To,
            "UH" => Uh,
            "VB" => Vb,
            "VBD" => Vbd,
            "VBG" => Vbg,
            "VBN" => Vbn,
            "VBP" => Vbp,
            "VBZ" => Vbz,
            "WDT" => Wdt,
            "WP" => Wp,
            "WP$" => WpPoss,
            "WRB" => Wrb,
            "." | "!" | "?" => SentFinal,
            "," => Comma,
            ":" | ";" | "--" | "..." => MidPunct,
            "(" | "-LRB-" => OpenParen,
            ")" | "-RRB-" => CloseParen,
            "''" | "``" | "\"" => Quote,
            "$" => Dollar,
            other => return Err(format!("unknown POS tag: {other}")),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_all_tags() {
        for tag in PosTag::all() {
            let parsed: PosTag = tag.as_str().parse().unwrap();
            assert_eq!(parsed, *tag);
        }
    }

    #[test]
    fn serde_uses_ptb_strings() {
        assert_eq!(serde_json::to_string(&PosTag::PrpPoss).unwrap(), "\"PRP$\"");
        assert_eq!(serde_json::from_str::<PosTag>("\"VBD\"").unwrap(), PosTag::Vbd);
    }
}
