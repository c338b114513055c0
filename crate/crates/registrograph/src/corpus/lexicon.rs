//! Bundled lexicons for the deterministic tagger and sentence splitter.
//!
//! Closed-class word inventories, a small irregular-verb table, and the
//! abbreviation list used to suppress sentence breaks. All tables are fixed
//! at compile time so two runs over the same corpus produce identical
//! annotations.

use std::collections::{HashMap, HashSet};

use once_cell::sync::Lazy;

use super::tag::PosTag;

/// Abbreviations that keep a trailing period attached to the token and do
/// not end a sentence.
pub static ABBREVIATIONS: &[&str] = &[
    "mr.", "mrs.", "ms.", "dr.", "prof.", "sr.", "jr.", "st.", "mt.", "capt.", "gen.", "col.",
    "sgt.", "rev.", "hon.", "pres.", "gov.", "sen.", "rep.", "e.g.", "i.e.", "etc.", "cf.",
    "vs.", "viz.", "al.", "ca.", "approx.", "no.", "vol.", "fig.", "eq.", "jan.", "feb.",
    "mar.", "apr.", "jun.", "jul.", "aug.", "sep.", "sept.", "oct.", "nov.", "dec.", "mon.",
    "tue.", "wed.", "thu.", "fri.", "sat.", "sun.", "inc.", "ltd.", "co.", "corp.", "dept.",
    "univ.", "assn.", "bros.", "ave.", "blvd.", "rd.",
];

pub static ABBREVIATION_SET: Lazy<HashSet<&'static str>> =
    Lazy::new(|| ABBREVIATIONS.iter().copied().collect());

/// Words whose base tag is fixed regardless of context. Context rules may
/// still overwrite entries flagged ambiguous in `tagger.rs`.
static WORD_TAGS: &[(&str, PosTag)] = &[
    // determiners
    ("the", PosTag::Dt),
    ("a", PosTag::Dt),
    ("an", PosTag::Dt),
    ("some", PosTag::Dt),
    ("any", PosTag::Dt),
    ("no", PosTag::Dt),
    ("every", PosTag::Dt),
    ("each", PosTag::Dt),
    ("another", PosTag::Dt),
    ("either", PosTag::Dt),
    ("neither", PosTag::Dt),
    ("this", PosTag::Dt),
    ("that", PosTag::Dt),
    ("these", PosTag::Dt),
    ("those", PosTag::Dt),
    ("all", PosTag::Pdt),
    ("both", PosTag::Pdt),
    ("half", PosTag::Pdt),
    ("such", PosTag::Pdt),
    // personal pronouns
    ("i", PosTag::Prp),
    ("you", PosTag::Prp),
    ("he", PosTag::Prp),
    ("she", PosTag::Prp),
    ("it", PosTag::Prp),
    ("we", PosTag::Prp),
    ("they", PosTag::Prp),
    ("me", PosTag::Prp),
    ("him", PosTag::Prp),
    ("us", PosTag::Prp),
    ("them", PosTag::Prp),
    ("myself", PosTag::Prp),
    ("yourself", PosTag::Prp),
    ("himself", PosTag::Prp),
    ("herself", PosTag::Prp),
    ("itself", PosTag::Prp),
    ("ourselves", PosTag::Prp),
    ("yourselves", PosTag::Prp),
    ("themselves", PosTag::Prp),
    ("mine", PosTag::Prp),
    ("yours", PosTag::Prp),
    ("hers", PosTag::Prp),
    ("ours", PosTag::Prp),
    ("theirs", PosTag::Prp),
    // possessive determiners
    ("my", PosTag::PrpPoss),
    ("your", PosTag::PrpPoss),
    ("its", PosTag::PrpPoss),
    ("our", PosTag::PrpPoss),
    ("their", PosTag::PrpPoss),
    // indefinite pronouns (PTB tags these NN; detectors match the word)
    ("anybody", PosTag::Nn),
    ("anyone", PosTag::Nn),
    ("anything", PosTag::Nn),
    ("everybody", PosTag::Nn),
    ("everyone", PosTag::Nn),
    ("everything", PosTag::Nn),
    ("nobody", PosTag::Nn),
    ("none", PosTag::Nn),
    ("nothing", PosTag::Nn),
    ("somebody", PosTag::Nn),
    ("someone", PosTag::Nn),
    ("something", PosTag::Nn),
    // modals
    ("can", PosTag::Md),
    ("could", PosTag::Md),
    ("may", PosTag::Md),
    ("might", PosTag::Md),
    ("must", PosTag::Md),
    ("shall", PosTag::Md),
    ("should", PosTag::Md),
    ("will", PosTag::Md),
    ("would", PosTag::Md),
    ("ought", PosTag::Md),
    // clipped modal hosts from contraction splitting (can't -> ca + n't)
    ("ca", PosTag::Md),
    ("wo", PosTag::Md),
    ("sha", PosTag::Md),
    ("ai", PosTag::Md),
    // coordinators
    ("and", PosTag::Cc),
    ("or", PosTag::Cc),
    ("but", PosTag::Cc),
    ("nor", PosTag::Cc),
    // to
    ("to", PosTag::To),
    // WH words
    ("who", PosTag::Wp),
    ("whom", PosTag::Wp),
    ("whoever", PosTag::Wp),
    ("what", PosTag::Wp),
    ("whatever", PosTag::Wp),
    ("whose", PosTag::WpPoss),
    ("which", PosTag::Wdt),
    ("when", PosTag::Wrb),
    ("where", PosTag::Wrb),
    ("why", PosTag::Wrb),
    ("how", PosTag::Wrb),
    ("whenever", PosTag::Wrb),
    ("wherever", PosTag::Wrb),
    // negation and frequent adverbs
    ("not", PosTag::Rb),
    ("n't", PosTag::Rb),
    ("so", PosTag::Rb),
    // place adverbs
    ("away", PosTag::Rb),
    ("abroad", PosTag::Rb),
    ("ahead", PosTag::Rb),
    ("ashore", PosTag::Rb),
    ("aside", PosTag::Rb),
    ("indoors", PosTag::Rb),
    ("outdoors", PosTag::Rb),
    ("nearby", PosTag::Rb),
    ("upstairs", PosTag::Rb),
    ("downstairs", PosTag::Rb),
    ("uphill", PosTag::Rb),
    ("downhill", PosTag::Rb),
    ("upstream", PosTag::Rb),
    ("downstream", PosTag::Rb),
    ("overseas", PosTag::Rb),
    ("overboard", PosTag::Rb),
    ("overland", PosTag::Rb),
    ("underground", PosTag::Rb),
    ("underfoot", PosTag::Rb),
    ("inland", PosTag::Rb),
    ("inshore", PosTag::Rb),
    ("hereabouts", PosTag::Rb),
    ("locally", PosTag::Rb),
    ("nowhere", PosTag::Rb),
    ("everywhere", PosTag::Rb),
    ("somewhere", PosTag::Rb),
    ("anywhere", PosTag::Rb),
    ("far", PosTag::Rb),
    // time adverbs
    ("afterwards", PosTag::Rb),
    ("afterward", PosTag::Rb),
    ("earlier", PosTag::Rb),
    ("later", PosTag::Rb),
    ("nowadays", PosTag::Rb),
    ("once", PosTag::Rb),
    ("tonight", PosTag::Rb),
    ("eventually", PosTag::Rb),
    ("immediately", PosTag::Rb),
    ("recently", PosTag::Rb),
    ("lately", PosTag::Rb),
    ("never", PosTag::Rb),
    ("always", PosTag::Rb),
    ("often", PosTag::Rb),
    ("sometimes", PosTag::Rb),
    ("usually", PosTag::Rb),
    ("very", PosTag::Rb),
    ("too", PosTag::Rb),
    ("also", PosTag::Rb),
    ("quite", PosTag::Rb),
    ("rather", PosTag::Rb),
    ("just", PosTag::Rb),
    ("really", PosTag::Rb),
    ("still", PosTag::Rb),
    ("already", PosTag::Rb),
    ("yet", PosTag::Rb),
    ("even", PosTag::Rb),
    ("again", PosTag::Rb),
    ("then", PosTag::Rb),
    ("now", PosTag::Rb),
    ("here", PosTag::Rb),
    ("today", PosTag::Rb),
    ("tomorrow", PosTag::Rb),
    ("yesterday", PosTag::Rb),
    ("soon", PosTag::Rb),
    ("maybe", PosTag::Rb),
    ("perhaps", PosTag::Rb),
    ("almost", PosTag::Rb),
    ("nearly", PosTag::Rb),
    ("barely", PosTag::Rb),
    ("hardly", PosTag::Rb),
    ("merely", PosTag::Rb),
    ("scarcely", PosTag::Rb),
    ("slightly", PosTag::Rb),
    ("somewhat", PosTag::Rb),
    ("partly", PosTag::Rb),
    ("partially", PosTag::Rb),
    ("practically", PosTag::Rb),
    ("mildly", PosTag::Rb),
    ("only", PosTag::Rb),
    ("however", PosTag::Rb),
    ("therefore", PosTag::Rb),
    ("thus", PosTag::Rb),
    ("hence", PosTag::Rb),
    ("consequently", PosTag::Rb),
    ("furthermore", PosTag::Rb),
    ("moreover", PosTag::Rb),
    ("nevertheless", PosTag::Rb),
    ("nonetheless", PosTag::Rb),
    ("likewise", PosTag::Rb),
    ("similarly", PosTag::Rb),
    ("accordingly", PosTag::Rb),
    ("conversely", PosTag::Rb),
    ("alternatively", PosTag::Rb),
    ("altogether", PosTag::Rb),
    ("instead", PosTag::Rb),
    ("otherwise", PosTag::Rb),
    ("namely", PosTag::Rb),
    ("anyway", PosTag::Rb),
    ("anyhow", PosTag::Rb),
    ("else", PosTag::Rb),
    ("well", PosTag::Rb),
    ("absolutely", PosTag::Rb),
    ("completely", PosTag::Rb),
    ("enormously", PosTag::Rb),
    ("entirely", PosTag::Rb),
    ("extremely", PosTag::Rb),
    ("fully", PosTag::Rb),
    ("greatly", PosTag::Rb),
    ("highly", PosTag::Rb),
    ("intensely", PosTag::Rb),
    ("perfectly", PosTag::Rb),
    ("strongly", PosTag::Rb),
    ("thoroughly", PosTag::Rb),
    ("totally", PosTag::Rb),
    ("utterly", PosTag::Rb),
    ("more", PosTag::Rbr),
    ("less", PosTag::Rbr),
    ("most", PosTag::Rbs),
    ("least", PosTag::Rbs),
    // prepositions and subordinators (all IN; context rules handle the
    // preposition/adverb ambiguity for a subset, see AMBIGUOUS_PREP_ADV)
    ("about", PosTag::In),
    ("above", PosTag::In),
    ("across", PosTag::In),
    ("after", PosTag::In),
    ("against", PosTag::In),
    ("along", PosTag::In),
    ("among", PosTag::In),
    ("around", PosTag::In),
    ("at", PosTag::In),
    ("before", PosTag::In),
    ("behind", PosTag::In),
    ("below", PosTag::In),
    ("beneath", PosTag::In),
    ("beside", PosTag::In),
    ("besides", PosTag::In),
    ("between", PosTag::In),
    ("beyond", PosTag::In),
    ("by", PosTag::In),
    ("despite", PosTag::In),
    ("during", PosTag::In),
    ("except", PosTag::In),
    ("for", PosTag::In),
    ("from", PosTag::In),
    ("in", PosTag::In),
    ("inside", PosTag::In),
    ("into", PosTag::In),
    ("like", PosTag::In),
    ("near", PosTag::In),
    ("of", PosTag::In),
    ("off", PosTag::In),
    ("on", PosTag::In),
    ("onto", PosTag::In),
    ("out", PosTag::In),
    ("outside", PosTag::In),
    ("over", PosTag::In),
    ("past", PosTag::In),
    ("through", PosTag::In),
    ("throughout", PosTag::In),
    ("till", PosTag::In),
    ("toward", PosTag::In),
    ("towards", PosTag::In),
    ("under", PosTag::In),
    ("underneath", PosTag::In),
    ("until", PosTag::In),
    ("up", PosTag::In),
    ("down", PosTag::In),
    ("upon", PosTag::In),
    ("with", PosTag::In),
    ("within", PosTag::In),
    ("without", PosTag::In),
    ("because", PosTag::In),
    ("although", PosTag::In),
    ("though", PosTag::In),
    ("if", PosTag::In),
    ("unless", PosTag::In),
    ("since", PosTag::In),
    ("while", PosTag::In),
    ("whereas", PosTag::In),
    ("whilst", PosTag::In),
    ("whether", PosTag::In),
    ("as", PosTag::In),
    // common adjectives that suffix rules would miss
    ("good", PosTag::Jj),
    ("bad", PosTag::Jj),
    ("big", PosTag::Jj),
    ("small", PosTag::Jj),
    ("large", PosTag::Jj),
    ("new", PosTag::Jj),
    ("old", PosTag::Jj),
    ("young", PosTag::Jj),
    ("long", PosTag::Jj),
    ("short", PosTag::Jj),
    ("high", PosTag::Jj),
    ("low", PosTag::Jj),
    ("great", PosTag::Jj),
    ("little", PosTag::Jj),
    ("own", PosTag::Jj),
    ("other", PosTag::Jj),
    ("same", PosTag::Jj),
    ("different", PosTag::Jj),
    ("important", PosTag::Jj),
    ("sure", PosTag::Jj),
    ("glad", PosTag::Jj),
    ("happy", PosTag::Jj),
    ("sad", PosTag::Jj),
    ("hot", PosTag::Jj),
    ("cold", PosTag::Jj),
    ("warm", PosTag::Jj),
    ("fine", PosTag::Jj),
    ("nice", PosTag::Jj),
    ("real", PosTag::Jj),
    ("true", PosTag::Jj),
    ("false", PosTag::Jj),
    ("free", PosTag::Jj),
    ("full", PosTag::Jj),
    ("easy", PosTag::Jj),
    ("hard", PosTag::Jj),
    ("clear", PosTag::Jj),
    ("strong", PosTag::Jj),
    ("weak", PosTag::Jj),
    ("right", PosTag::Jj),
    ("wrong", PosTag::Jj),
    ("main", PosTag::Jj),
    ("whole", PosTag::Jj),
    ("certain", PosTag::Jj),
    ("likely", PosTag::Jj),
    ("available", PosTag::Jj),
    ("possible", PosTag::Jj),
    ("difficult", PosTag::Jj),
    ("ready", PosTag::Jj),
    ("early", PosTag::Jj),
    ("late", PosTag::Jj),
    ("next", PosTag::Jj),
    ("last", PosTag::Jj),
    ("first", PosTag::Jj),
    ("second", PosTag::Jj),
    ("third", PosTag::Jj),
    ("few", PosTag::Jj),
    ("several", PosTag::Jj),
    ("many", PosTag::Jj),
    ("much", PosTag::Jj),
    ("better", PosTag::Jjr),
    ("worse", PosTag::Jjr),
    ("best", PosTag::Jjs),
    ("worst", PosTag::Jjs),
    // interjections
    ("oh", PosTag::Uh),
    ("hey", PosTag::Uh),
    ("wow", PosTag::Uh),
    ("yes", PosTag::Uh),
    ("yeah", PosTag::Uh),
    ("hi", PosTag::Uh),
    ("hello", PosTag::Uh),
    ("bye", PosTag::Uh),
    ("please", PosTag::Uh),
    ("okay", PosTag::Uh),
    ("ok", PosTag::Uh),
    // short nouns the -ing/-s suffix rules would misread
    ("thing", PosTag::Nn),
    ("things", PosTag::Nns),
    ("king", PosTag::Nn),
    ("ring", PosTag::Nn),
    ("wing", PosTag::Nn),
    ("song", PosTag::Nn),
    ("morning", PosTag::Nn),
    ("evening", PosTag::Nn),
    ("building", PosTag::Nn),
    ("meeting", PosTag::Nn),
    ("feeling", PosTag::Nn),
    ("wedding", PosTag::Nn),
    ("ceiling", PosTag::Nn),
    ("news", PosTag::Nn),
    ("bus", PosTag::Nn),
    ("gas", PosTag::Nn),
    ("glass", PosTag::Nn),
    ("class", PosTag::Nn),
    ("grass", PosTag::Nn),
    ("boss", PosTag::Nn),
    ("loss", PosTag::Nn),
    ("analysis", PosTag::Nn),
    ("basis", PosTag::Nn),
    ("crisis", PosTag::Nn),
    ("series", PosTag::Nn),
    ("species", PosTag::Nn),
    ("lens", PosTag::Nn),
];

/// Forms of be / have / do, tagged by form.
static AUX_TAGS: &[(&str, PosTag)] = &[
    ("be", PosTag::Vb),
    ("am", PosTag::Vbp),
    ("are", PosTag::Vbp),
    ("is", PosTag::Vbz),
    ("was", PosTag::Vbd),
    ("were", PosTag::Vbd),
    ("been", PosTag::Vbn),
    ("being", PosTag::Vbg),
    ("have", PosTag::Vbp),
    ("has", PosTag::Vbz),
    ("had", PosTag::Vbd),
    ("having", PosTag::Vbg),
    ("do", PosTag::Vbp),
    ("does", PosTag::Vbz),
    ("did", PosTag::Vbd),
    ("doing", PosTag::Vbg),
    ("done", PosTag::Vbn),
    // clitics (tokenizer splits these off)
    ("'m", PosTag::Vbp),
    ("'re", PosTag::Vbp),
    ("'ve", PosTag::Vbp),
    ("'ll", PosTag::Md),
];

pub static BE_FORMS: Lazy<HashSet<&'static str>> = Lazy::new(|| {
    ["be", "am", "are", "is", "was", "were", "been", "being", "'m", "'re", "'s"]
        .into_iter()
        .collect()
});

pub static HAVE_FORMS: Lazy<HashSet<&'static str>> =
    Lazy::new(|| ["have", "has", "had", "having", "'ve"].into_iter().collect());

pub static DO_FORMS: Lazy<HashSet<&'static str>> =
    Lazy::new(|| ["do", "does", "did", "done", "doing"].into_iter().collect());

/// Irregular past / participle forms: surface -> (lemma, VBD or VBN or both).
/// `both` means the form serves as past tense and past participle and is
/// disambiguated by context.
pub struct IrregularVerb {
    pub lemma: &'static str,
    pub past: bool,
    pub participle: bool,
}

static IRREGULAR_PAST: &[(&str, &str, bool, bool)] = &[
    // (form, lemma, is_past, is_participle)
    ("went", "go", true, false),
    ("gone", "go", false, true),
    ("saw", "see", true, false),
    ("seen", "see", false, true),
    ("said", "say", true, true),
    ("told", "tell", true, true),
    ("thought", "think", true, true),
    ("knew", "know", true, false),
    ("known", "know", false, true),
    ("made", "make", true, true),
    ("took", "take", true, false),
    ("taken", "take", false, true),
    ("came", "come", true, false),
    ("got", "get", true, true),
    ("gotten", "get", false, true),
    ("gave", "give", true, false),
    ("given", "give", false, true),
    ("found", "find", true, true),
    ("felt", "feel", true, true),
    ("kept", "keep", true, true),
    ("heard", "hear", true, true),
    ("meant", "mean", true, true),
    ("met", "meet", true, true),
    ("ran", "run", true, false),
    ("run", "run", false, true),
    ("sat", "sit", true, true),
    ("spoke", "speak", true, false),
    ("spoken", "speak", false, true),
    ("stood", "stand", true, true),
    ("understood", "understand", true, true),
    ("wrote", "write", true, false),
    ("written", "write", false, true),
    ("broke", "break", true, false),
    ("broken", "break", false, true),
    ("brought", "bring", true, true),
    ("built", "build", true, true),
    ("bought", "buy", true, true),
    ("caught", "catch", true, true),
    ("chose", "choose", true, false),
    ("chosen", "choose", false, true),
    ("drew", "draw", true, false),
    ("drawn", "draw", false, true),
    ("drove", "drive", true, false),
    ("driven", "drive", false, true),
    ("ate", "eat", true, false),
    ("eaten", "eat", false, true),
    ("fell", "fall", true, false),
    ("fallen", "fall", false, true),
    ("flew", "fly", true, false),
    ("flown", "fly", false, true),
    ("forgot", "forget", true, false),
    ("forgotten", "forget", false, true),
    ("grew", "grow", true, false),
    ("grown", "grow", false, true),
    ("held", "hold", true, true),
    ("hit", "hit", true, true),
    ("led", "lead", true, true),
    ("left", "leave", true, true),
    ("lost", "lose", true, true),
    ("paid", "pay", true, true),
    ("put", "put", true, true),
    ("read", "read", true, true),
    ("rode", "ride", true, false),
    ("ridden", "ride", false, true),
    ("rose", "rise", true, false),
    ("risen", "rise", false, true),
    ("sent", "send", true, true),
    ("showed", "show", true, false),
    ("shown", "show", false, true),
    ("sang", "sing", true, false),
    ("sung", "sing", false, true),
    ("slept", "sleep", true, true),
    ("sold", "sell", true, true),
    ("spent", "spend", true, true),
    ("swam", "swim", true, false),
    ("swum", "swim", false, true),
    ("taught", "teach", true, true),
    ("threw", "throw", true, false),
    ("thrown", "throw", false, true),
    ("woke", "wake", true, false),
    ("woken", "wake", false, true),
    ("wore", "wear", true, false),
    ("worn", "wear", false, true),
    ("won", "win", true, true),
    ("began", "begin", true, false),
    ("begun", "begin", false, true),
    ("become", "become", false, true),
    ("became", "become", true, false),
    ("let", "let", true, true),
    ("set", "set", true, true),
    ("cut", "cut", true, true),
];

pub static IRREGULAR_VERBS: Lazy<HashMap<&'static str, IrregularVerb>> = Lazy::new(|| {
    IRREGULAR_PAST
        .iter()
        .map(|&(form, lemma, past, participle)| {
            (form, IrregularVerb { lemma, past, participle })
        })
        .collect()
});

/// Base forms of verbs the suffix rules cannot identify. Used to resolve
/// VB/VBP readings and the -s third-person inflection.
static BASE_VERBS: &[&str] = &[
    "go", "see", "say", "tell", "think", "know", "make", "take", "come", "get", "give", "find",
    "feel", "keep", "hear", "mean", "meet", "run", "sit", "speak", "stand", "understand",
    "write", "walk", "talk", "look", "want", "need", "like", "love", "hate", "work", "play",
    "help", "start", "stop", "try", "ask", "answer", "call", "live", "move", "turn", "follow",
    "believe", "hope", "guess", "suppose", "remember", "forget", "learn", "teach", "read",
    "eat", "drink", "sleep", "buy", "sell", "pay", "send", "bring", "build", "catch", "choose",
    "draw", "drive", "fall", "fly", "grow", "hit", "hold", "lead", "lose", "put", "ride",
    "rise", "show", "sing", "throw", "wake", "wear", "win", "seem", "appear", "happen",
    "change", "use", "include", "provide", "offer", "expect", "decide", "agree", "insist",
    "propose", "suggest", "claim", "assert", "declare", "mention", "report", "admit", "deny",
    "explain", "promise", "reply", "assume", "doubt", "conclude", "realize", "recognize",
    "notice", "imagine", "indicate", "prove", "reveal", "demand", "recommend", "request",
    "urge", "command", "instruct", "acknowledge", "complain", "hint", "proclaim", "protest",
    "remark", "swear", "anticipate", "demonstrate", "determine", "discover", "estimate",
    "fear", "imply", "infer", "arrange", "beg", "grant", "ordain", "pledge", "pronounce",
    "stipulate", "begin", "become", "let", "set", "cut", "add", "open", "close", "leave",
    "wait", "stay", "spend", "visit", "plan", "cook", "clean", "fix", "smile", "laugh",
    "cry", "rain", "snow", "travel", "return", "arrive", "enter", "pass", "carry", "push",
    "pull", "throw", "wash", "water", "plant", "pick", "drop", "miss", "matter", "apply",
];

pub static BASE_VERB_SET: Lazy<HashSet<&'static str>> =
    Lazy::new(|| BASE_VERBS.iter().copied().collect());

/// Preposition/adverb ambiguous words: prepositional before a noun phrase,
/// adverbial otherwise.
pub static AMBIGUOUS_PREP_ADV: Lazy<HashSet<&'static str>> = Lazy::new(|| {
    [
        "aboard", "about", "above", "across", "after", "along", "alongside", "around", "before",
        "behind", "below", "beneath", "beside", "beyond", "by", "down", "in", "inside", "near",
        "off", "on", "out", "outside", "over", "past", "through", "under", "underneath", "up",
    ]
    .into_iter()
    .collect()
});

pub static WORD_TAG_MAP: Lazy<HashMap<&'static str, PosTag>> = Lazy::new(|| {
    let mut map: HashMap<&'static str, PosTag> = HashMap::new();
    for &(word, tag) in WORD_TAGS {
        map.insert(word, tag);
    }
    for &(word, tag) in AUX_TAGS {
        map.insert(word, tag);
    }
    map
});

/// Lemmas for clitic tokens produced by contraction splitting.
pub static CLITIC_LEMMAS: Lazy<HashMap<&'static str, &'static str>> = Lazy::new(|| {
    [
        ("n't", "not"),
        ("'re", "be"),
        ("'m", "be"),
        ("'ve", "have"),
        ("'ll", "will"),
    ]
    .into_iter()
    .collect()
});

/// Cardinal number words.
pub static NUMBER_WORDS: Lazy<HashSet<&'static str>> = Lazy::new(|| {
    [
        "zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine", "ten",
        "eleven", "twelve", "thirteen", "fourteen", "fifteen", "sixteen", "seventeen",
        "eighteen", "nineteen", "twenty", "thirty", "forty", "fifty", "sixty", "seventy",
        "eighty", "ninety", "hundred", "thousand", "million", "billion",
    ]
    .into_iter()
    .collect()
});
