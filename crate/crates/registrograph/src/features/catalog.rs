//! The 67-feature catalog: identities, categories, detector kinds, and the
//! JSON export that reports and tests share.

use serde::{Deserialize, Serialize};

use crate::checksum::fnv1a_hex;
use crate::error::Result;

/// Grammatical / functional category, A through P.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Category {
    /// Tense and aspect markers
    A,
    /// Place and time adverbials
    B,
    /// Pronouns and pro-verbs
    C,
    /// Questions
    D,
    /// Nominal forms
    E,
    /// Passives
    F,
    /// Stative forms
    G,
    /// Subordination features
    H,
    /// Prepositional phrases, adjectives, and adverbs
    I,
    /// Lexical specificity
    J,
    /// Lexical classes
    K,
    /// Modals
    L,
    /// Verb classes
    M,
    /// Reduced forms and dispreferred structures
    N,
    /// Coordination
    O,
    /// Negation
    P,
}

impl Category {
    pub fn label(&self) -> &'static str {
        match self {
            Category::A => "tense and aspect markers",
            Category::B => "place and time adverbials",
            Category::C => "pronouns and pro-verbs",
            Category::D => "questions",
            Category::E => "nominal forms",
            Category::F => "passives",
            Category::G => "stative forms",
            Category::H => "subordination",
            Category::I => "prepositional phrases, adjectives, and adverbs",
            Category::J => "lexical specificity",
            Category::K => "lexical classes",
            Category::L => "modals",
            Category::M => "verb classes",
            Category::N => "reduced forms and dispreferred structures",
            Category::O => "coordination",
            Category::P => "negation",
        }
    }
}

/// How a feature is detected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DetectorKind {
    /// Membership in a word list
    LexicalList,
    /// Single-tag or tag-context pattern
    TagPattern,
    /// Window pattern over several tokens
    MultiTokenPattern,
    /// Document-level scalar, not a count
    ScalarStatistic,
}

/// Identity of one feature.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FeatureId {
    /// 1-based index, stable across the toolkit
    pub index: usize,
    /// short stable code, e.g. F01_past_tense
    pub code: String,
    pub category: Category,
    pub description: String,
    pub kind: DetectorKind,
}

/// The full inventory of 67 features plus extraction settings.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FeatureCatalog {
    pub entries: Vec<FeatureId>,
    /// Token window for the type-token ratio (feature 43).
    pub ttr_window: usize,
}

pub const FEATURE_COUNT: usize = 67;
pub const DEFAULT_TTR_WINDOW: usize = 400;

/// Indices (1-based) of the scalar-statistic features.
pub const TTR_INDEX: usize = 43;
pub const MEAN_WORD_LENGTH_INDEX: usize = 44;

struct Def(&'static str, Category, DetectorKind, &'static str);

use Category as C;
use DetectorKind::*;

#[rustfmt::skip]
static DEFS: [Def; FEATURE_COUNT] = [
    Def("F01_past_tense", C::A, TagPattern, "past tense verbs (VBD)"),
    Def("F02_perfect_aspect", C::A, MultiTokenPattern, "perfect aspect: form of HAVE followed by a past participle"),
    Def("F03_present_tense", C::A, TagPattern, "present tense verbs (VBP, VBZ)"),
    Def("F04_place_adverbials", C::B, LexicalList, "place adverbials used adverbially (away, nearby, upstairs)"),
    Def("F05_time_adverbials", C::B, LexicalList, "time adverbials (soon, recently, tonight)"),
    Def("F06_first_person_pronouns", C::C, LexicalList, "first person pronouns and possessives"),
    Def("F07_second_person_pronouns", C::C, LexicalList, "second person pronouns and possessives"),
    Def("F08_third_person_pronouns", C::C, LexicalList, "third person personal pronouns, excluding it"),
    Def("F09_pronoun_it", C::C, LexicalList, "the pronoun it"),
    Def("F10_demonstrative_pronouns", C::C, TagPattern, "this/that/these/those heading no noun phrase"),
    Def("F11_indefinite_pronouns", C::C, LexicalList, "indefinite pronouns (someone, nothing, everybody)"),
    Def("F12_proverb_do", C::C, MultiTokenPattern, "pro-verb DO: do/does/did with no base verb in reach"),
    Def("F13_wh_questions", C::D, MultiTokenPattern, "direct WH questions: sentence-initial WH word with question mark or inverted auxiliary"),
    Def("F14_nominalizations", C::E, TagPattern, "nouns ending in -tion, -ment, -ness, -ity and plurals"),
    Def("F15_gerunds", C::E, MultiTokenPattern, "-ing forms in nominal positions"),
    Def("F16_other_nouns", C::E, TagPattern, "nouns not counted as nominalizations or gerunds"),
    Def("F17_agentless_passives", C::F, MultiTokenPattern, "BE + past participle with no by-phrase in the clause"),
    Def("F18_by_passives", C::F, MultiTokenPattern, "BE + past participle followed by a by-phrase"),
    Def("F19_be_main_verb", C::G, MultiTokenPattern, "BE as main verb: no participle follows"),
    Def("F20_existential_there", C::G, TagPattern, "existential there (EX)"),
    Def("F21_that_verb_complements", C::H, TagPattern, "that-complement directly after a verb"),
    Def("F22_that_adj_complements", C::H, TagPattern, "that-complement directly after an adjective"),
    Def("F23_wh_clauses", C::H, TagPattern, "WH word directly after a verb"),
    Def("F24_infinitives", C::H, MultiTokenPattern, "to followed by a base verb, adverbs allowed between"),
    Def("F25_present_participial_clauses", C::H, MultiTokenPattern, "sentence-initial -ing clause set off by a comma"),
    Def("F26_past_participial_clauses", C::H, MultiTokenPattern, "sentence-initial past participle clause set off by a comma"),
    Def("F27_past_participial_postnominal", C::H, TagPattern, "past participle directly after a noun (reduced relative)"),
    Def("F28_present_participial_postnominal", C::H, TagPattern, "-ing participle directly after a noun"),
    Def("F29_that_relatives_subject", C::H, MultiTokenPattern, "that after a noun with a verb next (subject gap relative)"),
    Def("F30_that_relatives_object", C::H, MultiTokenPattern, "that after a noun with a noun phrase next (object gap relative)"),
    Def("F31_wh_relatives_subject", C::H, MultiTokenPattern, "who/whom/which after a noun with a verb next"),
    Def("F32_wh_relatives_object", C::H, MultiTokenPattern, "who/whom/which/whose after a noun with a noun phrase next"),
    Def("F33_pied_piping_relatives", C::H, TagPattern, "preposition + which/whom/whose"),
    Def("F34_sentence_relatives", C::H, TagPattern, "comma + which"),
    Def("F35_causative_subordinator", C::H, LexicalList, "because introducing a clause"),
    Def("F36_concessive_subordinators", C::H, LexicalList, "although, though"),
    Def("F37_conditional_subordinators", C::H, LexicalList, "if, unless"),
    Def("F38_other_subordinators", C::H, MultiTokenPattern, "since, while, whereas and phrasal subordinators"),
    Def("F39_prepositional_phrases", C::I, TagPattern, "prepositions heading phrases, subordinator uses excluded"),
    Def("F40_attributive_adjectives", C::I, TagPattern, "adjectives before a noun or another adjective"),
    Def("F41_predicative_adjectives", C::I, MultiTokenPattern, "adjectives after a copula with no noun following"),
    Def("F42_total_adverbs", C::I, TagPattern, "adverbs not counted as place/time adverbials or negation"),
    Def("F43_type_token_ratio", C::J, ScalarStatistic, "distinct alphabetic types over alphabetic tokens within the window"),
    Def("F44_mean_word_length", C::J, ScalarStatistic, "mean character length of alphabetic tokens"),
    Def("F45_conjuncts", C::K, MultiTokenPattern, "linking adverbials (however, therefore, for example)"),
    Def("F46_downtoners", C::K, LexicalList, "downtoners (barely, nearly, slightly)"),
    Def("F47_hedges", C::K, MultiTokenPattern, "hedges (at about, something like, almost)"),
    Def("F48_amplifiers", C::K, LexicalList, "amplifiers (absolutely, extremely, very)"),
    Def("F49_emphatics", C::K, MultiTokenPattern, "emphatics (a lot, for sure, really, so + adjective)"),
    Def("F50_discourse_particles", C::K, TagPattern, "sentence-initial well, now, anyway, anyhow"),
    Def("F51_demonstratives", C::K, TagPattern, "this/that/these/those heading a noun phrase"),
    Def("F52_possibility_modals", C::L, LexicalList, "can, could, may, might"),
    Def("F53_necessity_modals", C::L, LexicalList, "ought, should, must"),
    Def("F54_predictive_modals", C::L, LexicalList, "will, would, shall and 'll"),
    Def("F55_public_verbs", C::M, LexicalList, "public verbs (say, declare, mention)"),
    Def("F56_private_verbs", C::M, LexicalList, "private verbs (think, know, believe)"),
    Def("F57_suasive_verbs", C::M, LexicalList, "suasive verbs (command, insist, propose)"),
    Def("F58_speculative_verbs", C::M, LexicalList, "speculative verbs (seem, appear)"),
    Def("F59_contractions", C::N, TagPattern, "contracted verb and negation clitics"),
    Def("F60_that_deletion", C::N, MultiTokenPattern, "public/private/suasive verb followed by a bare complement clause"),
    Def("F61_stranded_prepositions", C::N, TagPattern, "preposition at a clause boundary with no object"),
    Def("F62_split_infinitives", C::N, MultiTokenPattern, "to + adverb(s) + base verb"),
    Def("F63_split_auxiliaries", C::N, MultiTokenPattern, "auxiliary + adverb(s) + verb"),
    Def("F64_phrasal_coordination", C::O, TagPattern, "and joining two tokens of the same word class"),
    Def("F65_clause_coordination", C::O, TagPattern, "clause-initial and"),
    Def("F66_synthetic_negation", C::P, MultiTokenPattern, "no + noun phrase, neither, nor"),
    Def("F67_analytic_negation", C::P, LexicalList, "not and n't"),
];

impl FeatureCatalog {
    /// Builds the bundled 67-feature catalog with the default TTR window.
    pub fn bundled() -> Self {
        Self::with_ttr_window(DEFAULT_TTR_WINDOW)
    }

    pub fn with_ttr_window(ttr_window: usize) -> Self {
        let entries = DEFS
            .iter()
            .enumerate()
            .map(|(i, def)| FeatureId {
                index: i + 1,
                code: def.0.to_string(),
                category: def.1,
                description: def.3.to_string(),
                kind: def.2,
            })
            .collect();
        FeatureCatalog { entries, ttr_window }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entry by 1-based index.
    pub fn get(&self, index: usize) -> Option<&FeatureId> {
        self.entries.get(index.checked_sub(1)?)
    }

    pub fn by_code(&self, code: &str) -> Option<&FeatureId> {
        self.entries.iter().find(|e| e.code == code)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(json: &str) -> Result<Self> {
        Ok(serde_json::from_str(json)?)
    }

    /// Stable fingerprint over codes, categories, kinds, and the TTR
    /// window; recorded in reports for provenance.
    pub fn checksum(&self) -> String {
        let mut payload = String::new();
        for entry in &self.entries {
            payload.push_str(&format!(
                "{}|{:?}|{:?};",
                entry.code, entry.category, entry.kind
            ));
        }
        payload.push_str(&self.ttr_window.to_string());
        fnv1a_hex(payload.as_bytes())
    }
}

impl Default for FeatureCatalog {
    fn default() -> Self {
        Self::bundled()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exactly_67_entries_with_bijective_codes() {
        let catalog = FeatureCatalog::bundled();
        assert_eq!(catalog.len(), 67);
        for (i, entry) in catalog.entries.iter().enumerate() {
            assert_eq!(entry.index, i + 1);
            assert!(entry.code.starts_with(&format!("F{:02}_", i + 1)));
        }
        let mut codes: Vec<&str> = catalog.entries.iter().map(|e| e.code.as_str()).collect();
        codes.sort();
        codes.dedup();
        assert_eq!(codes.len(), 67);
    }

    #[test]
    fn scalar_statistics_are_exactly_43_and_44() {
        let catalog = FeatureCatalog::bundled();
        let scalars: Vec<usize> = catalog
            .entries
            .iter()
            .filter(|e| e.kind == DetectorKind::ScalarStatistic)
            .map(|e| e.index)
            .collect();
        assert_eq!(scalars, vec![TTR_INDEX, MEAN_WORD_LENGTH_INDEX]);
    }

    #[test]
    fn category_grouping_matches_inventory() {
        let catalog = FeatureCatalog::bundled();
        let expect = |range: std::ops::RangeInclusive<usize>, cat: Category| {
            for i in range {
                assert_eq!(catalog.get(i).unwrap().category, cat, "feature {i}");
            }
        };
        expect(1..=3, Category::A);
        expect(4..=5, Category::B);
        expect(6..=12, Category::C);
        expect(13..=13, Category::D);
        expect(14..=16, Category::E);
        expect(17..=18, Category::F);
        expect(19..=20, Category::G);
        expect(21..=38, Category::H);
        expect(39..=42, Category::I);
        expect(43..=44, Category::J);
        expect(45..=51, Category::K);
        expect(52..=54, Category::L);
        expect(55..=58, Category::M);
        expect(59..=63, Category::N);
        expect(64..=65, Category::O);
        expect(66..=67, Category::P);
    }

    #[test]
    fn json_roundtrip_preserves_checksum() {
        let catalog = FeatureCatalog::bundled();
        let json = catalog.to_json().unwrap();
        let back = FeatureCatalog::from_json(&json).unwrap();
        assert_eq!(catalog.checksum(), back.checksum());
    }
}
