//! Lexical inventories backing the feature detectors.
//!
//! Verb-class lists are stored as base forms and expanded into inflected
//! surface forms at startup (regular -s/-ed/-ing orthography plus the
//! irregular table from the corpus lexicon).

use std::collections::HashSet;

use once_cell::sync::Lazy;

use crate::corpus::lexicon::IRREGULAR_VERBS;

pub static PLACE_ADVERBIALS: Lazy<HashSet<&'static str>> = Lazy::new(|| {
    [
        "aboard", "above", "abroad", "across", "ahead", "alongside", "around", "ashore",
        "astern", "away", "behind", "below", "beneath", "beside", "downhill", "downstairs",
        "downstream", "east", "far", "here", "hereabouts", "indoors", "inland", "inshore",
        "inside", "locally", "near", "nearby", "north", "nowhere", "outdoors", "outside",
        "overboard", "overland", "overseas", "south", "there", "underfoot", "underground",
        "underneath", "uphill", "upstairs", "upstream", "west",
    ]
    .into_iter()
    .collect()
});

pub static TIME_ADVERBIALS: Lazy<HashSet<&'static str>> = Lazy::new(|| {
    [
        "afterward", "afterwards", "again", "earlier", "early", "eventually", "formerly",
        "immediately", "initially", "instantly", "late", "lately", "later", "momentarily",
        "now", "nowadays", "once", "originally", "presently", "previously", "recently",
        "shortly", "simultaneously", "soon", "subsequently", "today", "tomorrow", "tonight",
        "yesterday",
    ]
    .into_iter()
    .collect()
});

pub static FIRST_PERSON: Lazy<HashSet<&'static str>> = Lazy::new(|| {
    ["i", "me", "we", "us", "my", "our", "mine", "ours", "myself", "ourselves"]
        .into_iter()
        .collect()
});

pub static SECOND_PERSON: Lazy<HashSet<&'static str>> = Lazy::new(|| {
    ["you", "your", "yours", "yourself", "yourselves"].into_iter().collect()
});

pub static THIRD_PERSON: Lazy<HashSet<&'static str>> = Lazy::new(|| {
    [
        "he", "she", "him", "her", "his", "hers", "they", "them", "their", "theirs",
        "himself", "herself", "themselves",
    ]
    .into_iter()
    .collect()
});

pub static INDEFINITE_PRONOUNS: Lazy<HashSet<&'static str>> = Lazy::new(|| {
    [
        "anybody", "anyone", "anything", "everybody", "everyone", "everything", "nobody",
        "none", "nothing", "somebody", "someone", "something",
    ]
    .into_iter()
    .collect()
});

pub static DEMONSTRATIVES: Lazy<HashSet<&'static str>> =
    Lazy::new(|| ["this", "that", "these", "those"].into_iter().collect());

pub static WH_WORDS: Lazy<HashSet<&'static str>> = Lazy::new(|| {
    ["what", "who", "whom", "whose", "which", "when", "where", "why", "how"]
        .into_iter()
        .collect()
});

pub static CONJUNCTS_ANYWHERE: Lazy<HashSet<&'static str>> = Lazy::new(|| {
    [
        "however", "therefore", "thus", "hence", "consequently", "furthermore", "moreover",
        "nevertheless", "nonetheless", "likewise", "similarly", "accordingly", "conversely",
        "alternatively", "namely", "viz.", "e.g.", "i.e.",
    ]
    .into_iter()
    .collect()
});

/// Conjunct readings of these words require clause-initial position.
pub static CONJUNCTS_CLAUSE_INITIAL: Lazy<HashSet<&'static str>> = Lazy::new(|| {
    ["instead", "otherwise", "rather", "altogether", "else"].into_iter().collect()
});

pub static CONJUNCT_PHRASES: &[&[&str]] = &[
    &["in", "comparison"],
    &["in", "contrast"],
    &["in", "particular"],
    &["in", "addition"],
    &["in", "conclusion"],
    &["in", "consequence"],
    &["in", "sum"],
    &["in", "summary"],
    &["in", "any", "event"],
    &["in", "any", "case"],
    &["in", "other", "words"],
    &["for", "example"],
    &["for", "instance"],
    &["by", "contrast"],
    &["by", "comparison"],
    &["as", "a", "result"],
    &["as", "a", "consequence"],
    &["on", "the", "contrary"],
    &["on", "the", "other", "hand"],
];

pub static DOWNTONERS: Lazy<HashSet<&'static str>> = Lazy::new(|| {
    [
        "almost", "barely", "hardly", "merely", "mildly", "nearly", "only", "partially",
        "partly", "practically", "scarcely", "slightly", "somewhat",
    ]
    .into_iter()
    .collect()
});

pub static HEDGE_SINGLES: Lazy<HashSet<&'static str>> =
    Lazy::new(|| ["almost", "maybe"].into_iter().collect());

pub static HEDGE_PHRASES: &[&[&str]] = &[
    &["at", "about"],
    &["something", "like"],
    &["more", "or", "less"],
];

/// sort of / kind of hedge readings; excluded after determiners and
/// adjectives (that sort of thing).
pub static HEDGE_SORT_KIND: &[&[&str]] = &[&["sort", "of"], &["kind", "of"]];

pub static AMPLIFIERS: Lazy<HashSet<&'static str>> = Lazy::new(|| {
    [
        "absolutely", "altogether", "completely", "enormously", "entirely", "extremely",
        "fully", "greatly", "highly", "intensely", "perfectly", "strongly", "thoroughly",
        "totally", "utterly", "very",
    ]
    .into_iter()
    .collect()
});

pub static EMPHATIC_SINGLES: Lazy<HashSet<&'static str>> =
    Lazy::new(|| ["just", "really"].into_iter().collect());

pub static EMPHATIC_PHRASES: &[&[&str]] = &[&["a", "lot"], &["for", "sure"], &["such", "a"]];

pub static DISCOURSE_PARTICLES: Lazy<HashSet<&'static str>> =
    Lazy::new(|| ["well", "now", "anyway", "anyhow", "anyways"].into_iter().collect());

pub static POSSIBILITY_MODALS: Lazy<HashSet<&'static str>> =
    Lazy::new(|| ["can", "could", "may", "might", "ca"].into_iter().collect());

pub static NECESSITY_MODALS: Lazy<HashSet<&'static str>> =
    Lazy::new(|| ["ought", "should", "must"].into_iter().collect());

pub static PREDICTIVE_MODALS: Lazy<HashSet<&'static str>> =
    Lazy::new(|| ["will", "would", "shall", "'ll", "wo"].into_iter().collect());

pub static PUBLIC_VERBS: &[&str] = &[
    "acknowledge", "admit", "agree", "assert", "claim", "complain", "declare", "deny",
    "explain", "hint", "insist", "mention", "proclaim", "promise", "protest", "remark",
    "reply", "report", "say", "suggest", "swear", "write",
];

pub static PRIVATE_VERBS: &[&str] = &[
    "anticipate", "assume", "believe", "conclude", "decide", "demonstrate", "determine",
    "discover", "doubt", "estimate", "fear", "feel", "find", "forget", "guess", "hear",
    "hope", "imagine", "imply", "indicate", "infer", "know", "learn", "mean", "notice",
    "prove", "realize", "recognize", "remember", "reveal", "see", "show", "suppose",
    "think", "understand",
];

pub static SUASIVE_VERBS: &[&str] = &[
    "arrange", "ask", "beg", "command", "demand", "grant", "insist", "instruct", "ordain",
    "pledge", "pronounce", "propose", "recommend", "request", "stipulate", "suggest", "urge",
];

pub static SPECULATIVE_VERBS: &[&str] = &["seem", "appear"];

/// Verbs that double their final consonant before -ed/-ing.
static DOUBLING: &[&str] = &["admit", "beg", "plan", "stop", "drop", "regret", "commit"];

/// Expands a base verb into its regular inflected forms.
fn inflect(base: &str) -> Vec<String> {
    let mut forms = vec![base.to_string()];
    let doubling = DOUBLING.contains(&base);
    let last = base.chars().next_back().unwrap_or('x');

    // third person singular
    if base.ends_with('s') || base.ends_with('x') || base.ends_with('z')
        || base.ends_with("ch") || base.ends_with("sh")
    {
        forms.push(format!("{base}es"));
    } else if base.ends_with('y') && !ends_with_vowel_y(base) {
        forms.push(format!("{}ies", &base[..base.len() - 1]));
    } else {
        forms.push(format!("{base}s"));
    }

    // past and participle (regular)
    if doubling {
        forms.push(format!("{base}{last}ed"));
        forms.push(format!("{base}{last}ing"));
    } else if base.ends_with('e') {
        forms.push(format!("{base}d"));
        forms.push(format!("{}ing", &base[..base.len() - 1]));
    } else if base.ends_with('y') && !ends_with_vowel_y(base) {
        forms.push(format!("{}ied", &base[..base.len() - 1]));
        forms.push(format!("{base}ing"));
    } else {
        forms.push(format!("{base}ed"));
        forms.push(format!("{base}ing"));
    }

    // irregular forms that map back to this base
    for (form, irr) in IRREGULAR_VERBS.iter() {
        if irr.lemma == base {
            forms.push((*form).to_string());
        }
    }
    forms
}

fn ends_with_vowel_y(base: &str) -> bool {
    let chars: Vec<char> = base.chars().collect();
    chars.len() >= 2
        && chars[chars.len() - 1] == 'y'
        && matches!(chars[chars.len() - 2], 'a' | 'e' | 'i' | 'o' | 'u')
}

fn expand(bases: &[&str]) -> (HashSet<&'static str>, HashSet<String>) {
    let base_set: HashSet<&'static str> = bases.iter().copied().collect();
    let mut forms = HashSet::new();
    for base in bases {
        for form in inflect(base) {
            forms.insert(form);
        }
    }
    (base_set, forms)
}

/// A verb class: base lemmas plus every inflected surface form.
pub struct VerbClass {
    pub bases: HashSet<&'static str>,
    pub forms: HashSet<String>,
}

impl VerbClass {
    fn new(bases: &[&str]) -> Self {
        let (bases, forms) = expand(bases);
        VerbClass { bases, forms }
    }

    /// Matches a token by lemma or by inflected surface form.
    pub fn matches(&self, lower: &str, lemma: &str) -> bool {
        self.bases.contains(lemma) || self.forms.contains(lower)
    }
}

pub static PUBLIC: Lazy<VerbClass> = Lazy::new(|| VerbClass::new(PUBLIC_VERBS));
pub static PRIVATE: Lazy<VerbClass> = Lazy::new(|| VerbClass::new(PRIVATE_VERBS));
pub static SUASIVE: Lazy<VerbClass> = Lazy::new(|| VerbClass::new(SUASIVE_VERBS));
pub static SPECULATIVE: Lazy<VerbClass> = Lazy::new(|| VerbClass::new(SPECULATIVE_VERBS));

/// -ing words never counted as gerunds.
pub static GERUND_EXCLUSIONS: Lazy<HashSet<&'static str>> = Lazy::new(|| {
    [
        "thing", "things", "anything", "everything", "nothing", "something", "king", "kings",
        "ring", "rings", "wing", "wings", "morning", "mornings", "evening", "evenings",
        "ceiling", "ceilings", "during", "spring",
    ]
    .into_iter()
    .collect()
});

/// Prepositions that stay subordinators for the prepositional-phrase count.
pub static SUBORDINATOR_WORDS: Lazy<HashSet<&'static str>> = Lazy::new(|| {
    [
        "because", "although", "though", "if", "unless", "since", "while", "whereas",
        "whilst", "whether", "that",
    ]
    .into_iter()
    .collect()
});

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inflection_covers_regular_orthography() {
        let forms = inflect("walk");
        for expected in ["walk", "walks", "walked", "walking"] {
            assert!(forms.contains(&expected.to_string()), "{expected} missing");
        }
        let forms = inflect("declare");
        for expected in ["declare", "declares", "declared", "declaring"] {
            assert!(forms.contains(&expected.to_string()), "{expected} missing");
        }
        let forms = inflect("try");
        for expected in ["try", "tries", "tried", "trying"] {
            assert!(forms.contains(&expected.to_string()), "{expected} missing");
        }
        let forms = inflect("admit");
        for expected in ["admit", "admits", "admitted", "admitting"] {
            assert!(forms.contains(&expected.to_string()), "{expected} missing");
        }
    }

    #[test]
    fn verb_classes_match_irregular_forms() {
        assert!(PUBLIC.matches("said", "say"));
        assert!(PUBLIC.matches("said", "said"));
        assert!(PRIVATE.matches("thought", "think"));
        assert!(PRIVATE.matches("knew", "knew"));
        assert!(SPECULATIVE.matches("seems", "seems"));
        assert!(!PUBLIC.matches("ran", "run"));
    }
}
