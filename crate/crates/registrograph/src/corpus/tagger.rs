//! Deterministic rule-based Penn Treebank tagger.
//!
//! Two passes per sentence: a lexical pass (closed-class lexicon, number
//! shapes, suffix rules) and a context pass that resolves the classic
//! ambiguities (-ed past vs participle, that, preposition vs adverb,
//! possessive vs contracted 's, and friends). Same input always yields the
//! same tags; unknown words fall through suffix and shape rules to NN and
//! never receive an "unknown" tag.

use super::lexicon::{
    AMBIGUOUS_PREP_ADV, BASE_VERB_SET, BE_FORMS, CLITIC_LEMMAS, DO_FORMS, HAVE_FORMS,
    IRREGULAR_VERBS, NUMBER_WORDS, WORD_TAG_MAP,
};
use super::tag::PosTag;
use super::tokenize::SpannedToken;
use super::Token;

#[derive(Debug, Clone, Default)]
pub struct Tagger {}

impl Tagger {
    pub fn new() -> Self {
        Tagger {}
    }

    /// Tags one sentence of tokens.
    pub fn tag_sentence(&self, tokens: &[SpannedToken]) -> Vec<Token> {
        let lowers: Vec<String> = tokens.iter().map(|t| t.surface.to_lowercase()).collect();
        let mut tags: Vec<PosTag> = tokens
            .iter()
            .enumerate()
            .map(|(i, t)| lexical_tag(&t.surface, &lowers[i], i == 0))
            .collect();

        context_pass(tokens, &lowers, &mut tags);

        tokens
            .iter()
            .zip(lowers)
            .zip(&tags)
            .map(|((spanned, lower), &pos)| {
                let lemma = lemma_for(&lower, pos);
                Token {
                    surface: spanned.surface.clone(),
                    lemma,
                    pos,
                    span: spanned.span,
                }
            })
            .collect()
    }
}

fn lemma_for(lower: &str, pos: PosTag) -> String {
    if let Some(&lemma) = CLITIC_LEMMAS.get(lower) {
        return lemma.to_string();
    }
    if pos.is_verb() {
        if let Some(irr) = IRREGULAR_VERBS.get(lower) {
            return irr.lemma.to_string();
        }
    }
    lower.to_string()
}

fn lexical_tag(surface: &str, lower: &str, sentence_initial: bool) -> PosTag {
    // punctuation and symbols
    if !surface.chars().any(|c| c.is_alphanumeric()) {
        return punct_tag(surface);
    }
    // numbers: 3, 3.14, 1,000, 1990s
    if surface.chars().next().is_some_and(|c| c.is_ascii_digit()) {
        return PosTag::Cd;
    }
    if NUMBER_WORDS.contains(lower) {
        return PosTag::Cd;
    }
    // clitics from contraction splitting
    match lower {
        "'s" => return PosTag::Pos, // flips to VBZ in context pass
        "'d" => return PosTag::Md,  // flips to VBD before a participle
        _ => {}
    }
    if let Some(&tag) = WORD_TAG_MAP.get(lower) {
        return tag;
    }
    if let Some(irr) = IRREGULAR_VERBS.get(lower) {
        return if irr.past { PosTag::Vbd } else { PosTag::Vbn };
    }
    if BASE_VERB_SET.contains(lower) {
        return PosTag::Vbp;
    }
    if is_third_person_verb(lower) {
        return PosTag::Vbz;
    }
    if let Some(tag) = suffix_tag(lower) {
        return tag;
    }
    // unknown capitalized word mid-sentence reads as a proper noun
    if !sentence_initial && surface.chars().next().is_some_and(|c| c.is_uppercase()) {
        return if lower.ends_with('s') && lower.len() > 3 {
            PosTag::Nnps
        } else {
            PosTag::Nnp
        };
    }
    // plural -s
    if lower.len() > 2
        && lower.ends_with('s')
        && !lower.ends_with("ss")
        && !lower.ends_with("us")
        && !lower.ends_with("is")
    {
        return PosTag::Nns;
    }
    PosTag::Nn
}

/// -s inflections of known base verbs: walks, goes, tries.
fn is_third_person_verb(lower: &str) -> bool {
    if !lower.ends_with('s') || lower.len() < 3 {
        return false;
    }
    if BASE_VERB_SET.contains(&lower[..lower.len() - 1]) {
        return true;
    }
    if lower.ends_with("es") && BASE_VERB_SET.contains(&lower[..lower.len() - 2]) {
        return true;
    }
    if lower.ends_with("ies") {
        let stem = format!("{}y", &lower[..lower.len() - 3]);
        if BASE_VERB_SET.contains(stem.as_str()) {
            return true;
        }
    }
    false
}

fn punct_tag(surface: &str) -> PosTag {
    match surface {
        "." | "!" | "?" | "\u{2026}" => PosTag::SentFinal,
        "," => PosTag::Comma,
        "(" | "[" | "{" => PosTag::OpenParen,
        ")" | "]" | "}" => PosTag::CloseParen,
        "\"" | "''" | "``" | "'" | "`" => PosTag::Quote,
        "$" | "\u{20ac}" | "\u{00a3}" => PosTag::Dollar,
        s if s.bytes().all(|b| b == b'.') => PosTag::SentFinal,
        ":" | ";" | "-" | "--" | "\u{2013}" | "\u{2014}" => PosTag::MidPunct,
        _ => PosTag::Sym,
    }
}

fn suffix_tag(lower: &str) -> Option<PosTag> {
    let n = lower.len();
    for (suffix, singular, plural) in [
        ("tions", false, true),
        ("sions", false, true),
        ("ments", false, true),
        ("nesses", false, true),
        ("ities", false, true),
        ("tion", true, false),
        ("sion", true, false),
        ("ment", true, false),
        ("ness", true, false),
        ("ity", true, false),
    ] {
        if n > suffix.len() + 1 && lower.ends_with(suffix) {
            return Some(if singular { PosTag::Nn } else { PosTag::Nns });
        }
    }
    if n > 4 && lower.ends_with("ing") && lower.chars().all(|c| c.is_alphabetic()) {
        return Some(PosTag::Vbg);
    }
    if n > 3 && lower.ends_with("ed") && lower.chars().all(|c| c.is_alphabetic()) {
        return Some(PosTag::Vbd); // context pass may flip to VBN
    }
    if n > 3 && lower.ends_with("ly") {
        return Some(PosTag::Rb);
    }
    for adj_suffix in ["ous", "ful", "less", "ive", "able", "ible", "ish", "ic"] {
        if n > adj_suffix.len() + 2 && lower.ends_with(adj_suffix) {
            return Some(PosTag::Jj);
        }
    }
    None
}

/// Second pass: context-sensitive repairs, left to right.
fn context_pass(tokens: &[SpannedToken], lowers: &[String], tags: &mut [PosTag]) {
    let n = tokens.len();
    for i in 0..n {
        let lower = lowers[i].as_str();

        // lone apostrophe: possessive after an s-final word, quote otherwise
        if lower == "'" {
            tags[i] = if i > 0 && lowers[i - 1].ends_with('s') {
                PosTag::Pos
            } else {
                PosTag::Quote
            };
            continue;
        }

        // contracted 's reads as a verb after pronoun-like subjects
        if lower == "'s" {
            let verbal_host = i > 0
                && (matches!(tags[i - 1], PosTag::Prp | PosTag::Ex | PosTag::Wp | PosTag::Wrb)
                    || matches!(
                        lowers[i - 1].as_str(),
                        "it" | "he" | "she" | "that" | "this" | "there" | "who" | "what" | "one"
                            | "let"
                    ));
            tags[i] = if verbal_host { PosTag::Vbz } else { PosTag::Pos };
            continue;
        }

        // 'd: had before a participle, would otherwise
        if lower == "'d" {
            let next = next_skipping_adverbs(tags, i);
            tags[i] = match next {
                Some(j) if tags[j] == PosTag::Vbn => PosTag::Vbd,
                _ => PosTag::Md,
            };
            continue;
        }

        // that: complementizer after a verb, relativizer after a noun,
        // determiner/pronoun otherwise
        if lower == "that" {
            if i > 0 && tags[i - 1].is_verb() {
                tags[i] = PosTag::In;
            } else if i > 0 && tags[i - 1].is_noun() {
                tags[i] = PosTag::Wdt;
            } else {
                tags[i] = PosTag::Dt;
            }
            continue;
        }

        // existential there
        if lower == "there" {
            let next = next_skipping_adverbs(tags, i);
            let before_be = next.is_some_and(|j| BE_FORMS.contains(lowers[j].as_str()));
            tags[i] = if before_be { PosTag::Ex } else { PosTag::Rb };
            continue;
        }

        // her/his: possessive before a noun phrase, object pronoun otherwise
        if lower == "her" || lower == "his" {
            let np_next = i + 1 < n && tags[i + 1].starts_noun_phrase();
            tags[i] = if np_next { PosTag::PrpPoss } else { PosTag::Prp };
            continue;
        }

        // "like" after a subject is the verb, not the preposition
        if lower == "like" && tags[i] == PosTag::In && i > 0 && tags[i - 1] == PosTag::Prp {
            tags[i] = PosTag::Vbp;
            continue;
        }

        // preposition vs adverb for the ambiguous set
        if tags[i] == PosTag::In && AMBIGUOUS_PREP_ADV.contains(lower) {
            let np_next = i + 1 < n && tags[i + 1].starts_noun_phrase();
            if !np_next {
                tags[i] = PosTag::Rb;
            }
            continue;
        }

        // early/late: adverbial unless a noun follows
        if (lower == "early" || lower == "late") && tags[i] == PosTag::Jj {
            let noun_next = i + 1 < n && (tags[i + 1].is_noun() || tags[i + 1].is_adjective());
            if !noun_next {
                tags[i] = PosTag::Rb;
            }
            continue;
        }

        // comparative/superlative adverbs read adjectival before nouns
        if matches!(tags[i], PosTag::Rbr | PosTag::Rbs) && i + 1 < n && tags[i + 1].is_noun() {
            tags[i] = if tags[i] == PosTag::Rbr { PosTag::Jjr } else { PosTag::Jjs };
            continue;
        }

        // base form after to / modal / do-support
        if matches!(tags[i], PosTag::Vbp) {
            if let Some(j) = prev_skipping(tags, i, |t| t.is_adverb()) {
                if matches!(tags[j], PosTag::To | PosTag::Md) {
                    tags[i] = PosTag::Vb;
                    continue;
                }
            }
            if scan_back_for(lowers, tags, i, 4, |w, _| DO_FORMS.contains(w)) {
                tags[i] = PosTag::Vb;
                continue;
            }
        }

        // nominal reading of verbs directly after determiners: "the walk"
        if matches!(tags[i], PosTag::Vb | PosTag::Vbp)
            && i > 0
            && matches!(tags[i - 1], PosTag::Dt | PosTag::PrpPoss | PosTag::Jj | PosTag::Pdt)
        {
            tags[i] = PosTag::Nn;
            continue;
        }

        // nominal -ing after determiners when no noun follows: "the singing"
        if tags[i] == PosTag::Vbg
            && i > 0
            && matches!(tags[i - 1], PosTag::Dt | PosTag::PrpPoss)
            && !(i + 1 < n && (tags[i + 1].is_noun() || tags[i + 1].is_adjective()))
        {
            tags[i] = PosTag::Nn;
            continue;
        }

        // -ed resolution: participle readings
        if tags[i] == PosTag::Vbd {
            let irregular = IRREGULAR_VERBS.get(lower);
            let (can_past, can_participle) = match irregular {
                Some(irr) => (irr.past, irr.participle),
                None => (true, true), // regular -ed serves both
            };
            if !can_participle {
                continue; // went, saw: always past tense
            }
            let mut participle = !can_past;
            if !participle {
                participle = scan_back_for(lowers, tags, i, 3, |w, _| {
                    BE_FORMS.contains(w) || HAVE_FORMS.contains(w)
                });
            }
            if !participle && i > 0 && tags[i - 1].is_noun() && i + 1 < n && lowers[i + 1] == "by" {
                participle = true;
            }
            if !participle && i == 0 {
                // fronted participial clause: "Built well, the house ..."
                let window_end = n.min(7);
                if (1..window_end).any(|j| tags[j] == PosTag::Comma) {
                    participle = true;
                }
            }
            if participle {
                tags[i] = PosTag::Vbn;
            }
            continue;
        }
    }
}

/// Index of the previous token failing `skip`, if any.
fn prev_skipping(tags: &[PosTag], from: usize, skip: impl Fn(PosTag) -> bool) -> Option<usize> {
    (0..from).rev().find(|&j| !skip(tags[j]))
}

/// Index of the next non-adverb, non-negation token.
fn next_skipping_adverbs(tags: &[PosTag], from: usize) -> Option<usize> {
    (from + 1..tags.len()).find(|&j| !tags[j].is_adverb())
}

/// Scans left from `from` across at most `window` tokens, skipping adverbs,
/// pronouns, and bare subjects (for inverted questions), returning whether
/// `pred` matched.
fn scan_back_for(
    lowers: &[String],
    tags: &[PosTag],
    from: usize,
    window: usize,
    pred: impl Fn(&str, PosTag) -> bool,
) -> bool {
    let mut steps = 0;
    for j in (0..from).rev() {
        if steps >= window {
            return false;
        }
        steps += 1;
        if pred(lowers[j].as_str(), tags[j]) {
            return true;
        }
        let skippable = tags[j].is_adverb()
            || matches!(tags[j], PosTag::Prp | PosTag::Nn | PosTag::Nns | PosTag::Nnp | PosTag::Dt);
        if !skippable {
            return false;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::tokenize::tokenize;

    fn tag_text(text: &str) -> Vec<(String, PosTag)> {
        let tokens = tokenize(text);
        Tagger::new()
            .tag_sentence(&tokens)
            .into_iter()
            .map(|t| (t.surface, t.pos))
            .collect()
    }

    fn tag_of(text: &str, word: &str) -> PosTag {
        tag_text(text)
            .into_iter()
            .find(|(w, _)| w == word)
            .unwrap_or_else(|| panic!("{word} not found in {text}"))
            .1
    }

    #[test]
    fn spec_anchor_tags() {
        assert_eq!(tag_of("He walked", "walked"), PosTag::Vbd);
        assert_eq!(tag_of("the dog", "the"), PosTag::Dt);
        assert_eq!(tag_of("It seems fine", "seems"), PosTag::Vbz);
    }

    #[test]
    fn passive_participle() {
        assert_eq!(tag_of("the work was done", "done"), PosTag::Vbn);
        assert_eq!(tag_of("it was quickly finished", "finished"), PosTag::Vbn);
        assert_eq!(tag_of("she finished it", "finished"), PosTag::Vbd);
    }

    #[test]
    fn perfect_participle() {
        assert_eq!(tag_of("he has walked", "walked"), PosTag::Vbn);
        assert_eq!(tag_of("he had already gone", "gone"), PosTag::Vbn);
        assert_eq!(tag_of("he walked", "walked"), PosTag::Vbd);
    }

    #[test]
    fn fronted_participial_clause() {
        assert_eq!(tag_of("Built well, the house would stand.", "Built"), PosTag::Vbn);
    }

    #[test]
    fn postnominal_participle() {
        assert_eq!(tag_of("the solution produced by this process", "produced"), PosTag::Vbn);
    }

    #[test]
    fn that_readings() {
        assert_eq!(tag_of("I said that he went", "that"), PosTag::In);
        assert_eq!(tag_of("the dog that bit me", "that"), PosTag::Wdt);
        assert_eq!(tag_of("that dog barked", "that"), PosTag::Dt);
        assert_eq!(tag_of("that is nice", "that"), PosTag::Dt);
    }

    #[test]
    fn existential_versus_place_there() {
        assert_eq!(tag_of("there is a chance", "there"), PosTag::Ex);
        assert_eq!(tag_of("he went there", "there"), PosTag::Rb);
    }

    #[test]
    fn preposition_versus_adverb() {
        assert_eq!(tag_of("the bird flew above the house", "above"), PosTag::In);
        assert_eq!(tag_of("see the notes above", "above"), PosTag::Rb);
    }

    #[test]
    fn contracted_s_versus_possessive() {
        let tags = tag_text("it's John's book");
        assert_eq!(tags[1], ("'s".into(), PosTag::Vbz));
        assert_eq!(tags[3], ("'s".into(), PosTag::Pos));
    }

    #[test]
    fn base_verb_after_do_support() {
        assert_eq!(tag_of("What did he see?", "see"), PosTag::Vb);
        assert_eq!(tag_of("I don't know", "know"), PosTag::Vb);
        assert_eq!(tag_of("I know", "know"), PosTag::Vbp);
    }

    #[test]
    fn unknown_words_get_fallback_tags() {
        assert_eq!(tag_of("the blorp", "blorp"), PosTag::Nn);
        assert_eq!(tag_of("I met Zorblatt", "Zorblatt"), PosTag::Nnp);
        assert_eq!(tag_of("it was glimmed", "glimmed"), PosTag::Vbn);
        assert_eq!(tag_of("a flumping noise", "flumping"), PosTag::Vbg);
    }
}
