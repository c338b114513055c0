//! Detector rules for the 67 features.
//!
//! Every counting detector works sentence by sentence, so counts are
//! additive over documents and never cross sentence boundaries. Within one
//! feature, matches are non-overlapping and anchored at the leftmost token.
//! The rules are the toolkit's contract; docs/features.md spells each one
//! out.

use crate::corpus::lexicon::{BE_FORMS, DO_FORMS, HAVE_FORMS};
use crate::corpus::{PosTag, Token};

use super::wordlists as wl;

/// One sentence with precomputed lowercase surfaces.
pub struct Sent<'a> {
    pub tokens: &'a [Token],
    pub lower: Vec<String>,
}

impl<'a> Sent<'a> {
    pub fn new(tokens: &'a [Token]) -> Self {
        let lower = tokens.iter().map(|t| t.surface.to_lowercase()).collect();
        Sent { tokens, lower }
    }

    fn len(&self) -> usize {
        self.tokens.len()
    }

    fn tag(&self, i: usize) -> PosTag {
        self.tokens[i].pos
    }

    fn low(&self, i: usize) -> &str {
        &self.lower[i]
    }

    fn next_skipping_adverbs(&self, i: usize) -> Option<usize> {
        (i + 1..self.len()).find(|&j| !self.tag(j).is_adverb())
    }
}

fn noun_phrase_head_next(s: &Sent, i: usize) -> bool {
    i + 1 < s.len()
        && matches!(
            s.tag(i + 1),
            PosTag::Nn
                | PosTag::Nns
                | PosTag::Nnp
                | PosTag::Nnps
                | PosTag::Jj
                | PosTag::Jjr
                | PosTag::Jjs
                | PosTag::Cd
        )
}

fn np_start(tag: PosTag) -> bool {
    matches!(
        tag,
        PosTag::Dt
            | PosTag::Pdt
            | PosTag::Prp
            | PosTag::PrpPoss
            | PosTag::Nn
            | PosTag::Nns
            | PosTag::Nnp
            | PosTag::Nnps
            | PosTag::Jj
            | PosTag::Jjr
            | PosTag::Jjs
            | PosTag::Cd
    )
}

fn verbal(tag: PosTag) -> bool {
    tag.is_verb() || tag == PosTag::Md
}

fn clause_boundary(tag: PosTag) -> bool {
    matches!(
        tag,
        PosTag::SentFinal | PosTag::Comma | PosTag::MidPunct | PosTag::CloseParen | PosTag::Quote
    )
}

/// Counts non-overlapping phrase matches, leftmost anchored. Longer phrases
/// win at a shared anchor.
fn count_phrases(s: &Sent, phrases: &[&[&str]], mut extra_guard: impl FnMut(usize) -> bool) -> u32 {
    let mut count = 0;
    let mut i = 0;
    let mut sorted: Vec<&[&str]> = phrases.to_vec();
    sorted.sort_by_key(|p| std::cmp::Reverse(p.len()));
    while i < s.len() {
        let mut advanced = false;
        for phrase in &sorted {
            if i + phrase.len() <= s.len()
                && phrase.iter().enumerate().all(|(k, w)| s.low(i + k) == *w)
                && extra_guard(i)
            {
                count += 1;
                i += phrase.len();
                advanced = true;
                break;
            }
        }
        if !advanced {
            i += 1;
        }
    }
    count
}

fn count_where(s: &Sent, pred: impl Fn(&Sent, usize) -> bool) -> u32 {
    (0..s.len()).filter(|&i| pred(s, i)).count() as u32
}

/// Positions counted as gerunds; shared by features 15 and 16.
pub fn gerund_mask(s: &Sent) -> Vec<bool> {
    (0..s.len())
        .map(|i| {
            let lower = s.low(i);
            let ing = (lower.ends_with("ing") && lower.len() > 5)
                || (lower.ends_with("ings") && lower.len() > 6);
            if !ing || wl::GERUND_EXCLUSIONS.contains(lower) {
                return false;
            }
            if !matches!(s.tag(i), PosTag::Vbg | PosTag::Nn | PosTag::Nns) {
                return false;
            }
            let after_det = i > 0 && matches!(s.tag(i - 1), PosTag::Dt | PosTag::PrpPoss | PosTag::Pos);
            let after_preposition = i > 0
                && s.tag(i - 1) == PosTag::In
                && !(i + 1 < s.len() && s.tag(i + 1).is_noun());
            let initial_subject = i == 0
                && i + 1 < s.len()
                && matches!(s.tag(i + 1), PosTag::Vbz | PosTag::Vbd | PosTag::Md);
            after_det || after_preposition || initial_subject
        })
        .collect()
}

fn is_nominalization(lower: &str) -> bool {
    for (suffix, min_len) in [
        ("tions", 7),
        ("sions", 7),
        ("ments", 7),
        ("nesses", 8),
        ("ities", 7),
        ("tion", 6),
        ("sion", 6),
        ("ment", 6),
        ("ness", 6),
        ("ity", 5),
    ] {
        if lower.len() >= min_len && lower.ends_with(suffix) {
            return true;
        }
    }
    false
}

/// Place adverbial positions; shared by features 4 and 42.
fn place_adverbial(s: &Sent, i: usize) -> bool {
    s.tag(i).is_adverb() && wl::PLACE_ADVERBIALS.contains(s.low(i))
}

/// Time adverbial positions; shared by features 5 and 42.
fn time_adverbial(s: &Sent, i: usize) -> bool {
    s.tag(i).is_adverb() && wl::TIME_ADVERBIALS.contains(s.low(i))
}

/// BE token that anchors a passive, returning the participle index.
fn passive_participle(s: &Sent, i: usize) -> Option<usize> {
    if !BE_FORMS.contains(s.low(i)) || !verbal(s.tag(i)) {
        return None;
    }
    let mut skipped = 0;
    for j in i + 1..s.len() {
        match s.tag(j) {
            PosTag::Vbn => return Some(j),
            t if t.is_adverb() => {
                skipped += 1;
                if skipped > 2 {
                    return None;
                }
            }
            _ => return None,
        }
    }
    None
}

/// Whether a by-phrase follows within the clause after index `j`.
fn by_phrase_follows(s: &Sent, j: usize) -> bool {
    for k in j + 1..s.len().min(j + 6) {
        if clause_boundary(s.tag(k)) {
            return false;
        }
        if s.low(k) == "by" {
            return true;
        }
    }
    false
}

/// Counts one feature in one sentence. `index` is 1-based; features 43 and
/// 44 are document-level scalars and always return 0 here.
pub fn count_feature(index: usize, s: &Sent) -> u32 {
    match index {
        1 => count_where(s, |s, i| s.tag(i) == PosTag::Vbd),
        2 => count_where(s, |s, i| {
            let have = HAVE_FORMS.contains(s.low(i)) && verbal(s.tag(i));
            if !have {
                return false;
            }
            // participle within reach, allowing adverbs, negation, and an
            // inverted subject
            let mut steps = 0;
            for j in i + 1..s.len() {
                steps += 1;
                if steps > 4 {
                    return false;
                }
                match s.tag(j) {
                    PosTag::Vbn => return true,
                    t if t.is_adverb() => {}
                    PosTag::Prp | PosTag::Nn | PosTag::Nnp | PosTag::Dt => {}
                    _ => return false,
                }
            }
            false
        }),
        3 => count_where(s, |s, i| matches!(s.tag(i), PosTag::Vbp | PosTag::Vbz)),
        4 => count_where(s, place_adverbial),
        5 => count_where(s, time_adverbial),
        6 => count_where(s, |s, i| wl::FIRST_PERSON.contains(s.low(i))),
        7 => count_where(s, |s, i| wl::SECOND_PERSON.contains(s.low(i))),
        8 => count_where(s, |s, i| wl::THIRD_PERSON.contains(s.low(i))),
        9 => count_where(s, |s, i| s.low(i) == "it"),
        10 => count_where(s, |s, i| {
            s.tag(i) == PosTag::Dt
                && wl::DEMONSTRATIVES.contains(s.low(i))
                && match s.tokens.get(i + 1) {
                    None => true,
                    Some(next) => {
                        verbal(next.pos) || clause_boundary(next.pos) || next.pos == PosTag::Wp
                    }
                }
        }),
        11 => count_where(s, |s, i| wl::INDEFINITE_PRONOUNS.contains(s.low(i))),
        12 => count_where(s, |s, i| {
            if !matches!(s.low(i), "do" | "does" | "did") || !verbal(s.tag(i)) {
                return false;
            }
            // auxiliary DO has a base verb within reach
            let mut steps = 0;
            for j in i + 1..s.len() {
                steps += 1;
                if steps > 4 {
                    break;
                }
                match s.tag(j) {
                    PosTag::Vb | PosTag::Vbp => return false,
                    t if t.is_adverb() => {}
                    PosTag::Prp | PosTag::Nn | PosTag::Nns | PosTag::Nnp | PosTag::Dt => {}
                    _ => break,
                }
            }
            true
        }),
        13 => {
            let initial_wh = s.len() > 1 && wl::WH_WORDS.contains(s.low(0));
            if !initial_wh {
                return 0;
            }
            let ends_question = s.low(s.len() - 1) == "?";
            let inverted_aux = verbal(s.tag(1))
                || BE_FORMS.contains(s.low(1))
                || HAVE_FORMS.contains(s.low(1))
                || DO_FORMS.contains(s.low(1))
                || s.tag(1) == PosTag::Md;
            u32::from(ends_question || inverted_aux)
        }
        14 => count_where(s, |s, i| s.tag(i).is_noun() && is_nominalization(s.low(i))),
        15 => gerund_mask(s).iter().filter(|&&g| g).count() as u32,
        16 => {
            let gerunds = gerund_mask(s);
            count_where(s, |s, i| {
                s.tag(i).is_noun() && !is_nominalization(s.low(i)) && !gerunds[i]
            })
        }
        17 => count_where(s, |s, i| {
            passive_participle(s, i).is_some_and(|j| !by_phrase_follows(s, j))
        }),
        18 => count_where(s, |s, i| {
            passive_participle(s, i).is_some_and(|j| by_phrase_follows(s, j))
        }),
        19 => count_where(s, |s, i| {
            if !BE_FORMS.contains(s.low(i)) || !verbal(s.tag(i)) {
                return false;
            }
            match s.next_skipping_adverbs(i) {
                None => true,
                Some(j) => !matches!(s.tag(j), PosTag::Vbn | PosTag::Vbg),
            }
        }),
        20 => count_where(s, |s, i| s.tag(i) == PosTag::Ex),
        21 => count_where(s, |s, i| {
            s.low(i) == "that" && i > 0 && s.tag(i - 1).is_verb()
        }),
        22 => count_where(s, |s, i| {
            s.low(i) == "that" && i > 0 && s.tag(i - 1).is_adjective()
        }),
        23 => count_where(s, |s, i| {
            wl::WH_WORDS.contains(s.low(i)) && i > 0 && s.tag(i - 1).is_verb()
        }),
        24 => count_where(s, |s, i| {
            if s.tag(i) != PosTag::To {
                return false;
            }
            let mut adverbs = 0;
            for j in i + 1..s.len() {
                match s.tag(j) {
                    PosTag::Vb | PosTag::Vbp => return true,
                    t if t.is_adverb() && adverbs < 2 => adverbs += 1,
                    _ => return false,
                }
            }
            false
        }),
        25 => u32::from(
            !s.tokens.is_empty()
                && s.tag(0) == PosTag::Vbg
                && (1..s.len().min(7)).any(|j| s.tag(j) == PosTag::Comma),
        ),
        26 => u32::from(
            !s.tokens.is_empty()
                && s.tag(0) == PosTag::Vbn
                && (1..s.len().min(7)).any(|j| s.tag(j) == PosTag::Comma),
        ),
        27 => count_where(s, |s, i| {
            s.tag(i) == PosTag::Vbn && i > 0 && s.tag(i - 1).is_noun()
        }),
        28 => count_where(s, |s, i| {
            s.tag(i) == PosTag::Vbg && i > 0 && s.tag(i - 1).is_noun()
        }),
        29 => count_where(s, |s, i| {
            s.low(i) == "that"
                && i > 0
                && s.tag(i - 1).is_noun()
                && s.next_skipping_adverbs(i).is_some_and(|j| verbal(s.tag(j)))
        }),
        30 => count_where(s, |s, i| {
            s.low(i) == "that"
                && i > 0
                && s.tag(i - 1).is_noun()
                && i + 1 < s.len()
                && np_start(s.tag(i + 1))
        }),
        31 => count_where(s, |s, i| {
            matches!(s.low(i), "who" | "whom" | "which")
                && i > 0
                && s.tag(i - 1).is_noun()
                && s.next_skipping_adverbs(i).is_some_and(|j| verbal(s.tag(j)))
        }),
        32 => count_where(s, |s, i| {
            matches!(s.low(i), "who" | "whom" | "which" | "whose")
                && i > 0
                && s.tag(i - 1).is_noun()
                && i + 1 < s.len()
                && np_start(s.tag(i + 1))
        }),
        33 => count_where(s, |s, i| {
            matches!(s.low(i), "which" | "whom" | "whose") && i > 0 && s.tag(i - 1) == PosTag::In
        }),
        34 => count_where(s, |s, i| {
            s.low(i) == "which" && i > 0 && s.tag(i - 1) == PosTag::Comma
        }),
        35 => count_where(s, |s, i| {
            s.low(i) == "because" && s.tokens.get(i + 1).map_or(true, |n| n.surface.to_lowercase() != "of")
        }),
        36 => count_where(s, |s, i| matches!(s.low(i), "although" | "though")),
        37 => count_where(s, |s, i| matches!(s.low(i), "if" | "unless")),
        38 => {
            let singles = count_where(s, |s, i| {
                matches!(s.low(i), "since" | "while" | "whilst" | "whereas")
            });
            let phrases: &[&[&str]] = &[
                &["so", "that"],
                &["such", "that"],
                &["as", "long", "as"],
                &["as", "soon", "as"],
            ];
            singles + count_phrases(s, phrases, |_| true)
        }
        39 => count_where(s, |s, i| {
            s.tag(i) == PosTag::In && !wl::SUBORDINATOR_WORDS.contains(s.low(i))
        }),
        40 => count_where(s, |s, i| {
            s.tag(i).is_adjective()
                && i + 1 < s.len()
                && (s.tag(i + 1).is_noun() || s.tag(i + 1).is_adjective())
        }),
        41 => count_where(s, |s, i| {
            if !s.tag(i).is_adjective() {
                return false;
            }
            if i + 1 < s.len() && (s.tag(i + 1).is_noun() || s.tag(i + 1).is_adjective()) {
                return false;
            }
            // copula within two steps back, adverbs and negation between
            let mut steps = 0;
            for j in (0..i).rev() {
                steps += 1;
                if steps > 3 {
                    return false;
                }
                let lower = s.low(j);
                if (BE_FORMS.contains(lower) && verbal(s.tag(j)))
                    || wl::SPECULATIVE.matches(lower, &s.tokens[j].lemma)
                    || matches!(lower, "become" | "becomes" | "became" | "looks" | "look" | "looked" | "feels" | "felt" | "feel")
                {
                    return true;
                }
                if !s.tag(j).is_adverb() {
                    return false;
                }
            }
            false
        }),
        42 => count_where(s, |s, i| {
            s.tag(i).is_adverb()
                && !matches!(s.low(i), "not" | "n't")
                && !place_adverbial(s, i)
                && !time_adverbial(s, i)
        }),
        // 43 and 44 are document-level scalars
        43 | 44 => 0,
        45 => {
            let singles = count_where(s, |s, i| {
                wl::CONJUNCTS_ANYWHERE.contains(s.low(i))
                    || (wl::CONJUNCTS_CLAUSE_INITIAL.contains(s.low(i))
                        && (i == 0 || clause_boundary(s.tag(i - 1))))
            });
            singles + count_phrases(s, wl::CONJUNCT_PHRASES, |_| true)
        }
        46 => count_where(s, |s, i| wl::DOWNTONERS.contains(s.low(i))),
        47 => {
            let singles = count_where(s, |s, i| wl::HEDGE_SINGLES.contains(s.low(i)));
            let plain = count_phrases(s, wl::HEDGE_PHRASES, |_| true);
            let lowers: Vec<&str> = s.lower.iter().map(|l| l.as_str()).collect();
            let guarded = count_phrases(s, wl::HEDGE_SORT_KIND, |i| {
                i == 0
                    || !matches!(
                        s.tag(i - 1),
                        PosTag::Dt | PosTag::PrpPoss | PosTag::Jj | PosTag::Jjr | PosTag::Jjs
                    ) && lowers[i - 1] != "what"
            });
            singles + plain + guarded
        }
        48 => count_where(s, |s, i| wl::AMPLIFIERS.contains(s.low(i))),
        49 => {
            let singles = count_where(s, |s, i| wl::EMPHATIC_SINGLES.contains(s.low(i)));
            let phrases = count_phrases(s, wl::EMPHATIC_PHRASES, |_| true);
            let patterns = count_where(s, |s, i| {
                matches!(s.low(i), "so" | "real")
                    && i + 1 < s.len()
                    && s.tag(i + 1).is_adjective()
            });
            singles + phrases + patterns
        }
        50 => u32::from(!s.tokens.is_empty() && wl::DISCOURSE_PARTICLES.contains(s.low(0))),
        51 => count_where(s, |s, i| {
            s.tag(i) == PosTag::Dt
                && wl::DEMONSTRATIVES.contains(s.low(i))
                && noun_phrase_head_next(s, i)
        }),
        52 => count_where(s, |s, i| wl::POSSIBILITY_MODALS.contains(s.low(i)) && s.tag(i) == PosTag::Md),
        53 => count_where(s, |s, i| wl::NECESSITY_MODALS.contains(s.low(i)) && s.tag(i) == PosTag::Md),
        54 => count_where(s, |s, i| wl::PREDICTIVE_MODALS.contains(s.low(i)) && s.tag(i) == PosTag::Md),
        55 => count_where(s, |s, i| {
            s.tag(i).is_verb() && wl::PUBLIC.matches(s.low(i), &s.tokens[i].lemma)
        }),
        56 => count_where(s, |s, i| {
            s.tag(i).is_verb() && wl::PRIVATE.matches(s.low(i), &s.tokens[i].lemma)
        }),
        57 => count_where(s, |s, i| {
            s.tag(i).is_verb() && wl::SUASIVE.matches(s.low(i), &s.tokens[i].lemma)
        }),
        58 => count_where(s, |s, i| {
            s.tag(i).is_verb() && wl::SPECULATIVE.matches(s.low(i), &s.tokens[i].lemma)
        }),
        59 => count_where(s, |s, i| {
            let lower = s.low(i);
            lower == "n't"
                || matches!(lower, "'re" | "'ve" | "'ll" | "'d" | "'m")
                || (lower == "'s" && s.tag(i) == PosTag::Vbz)
        }),
        60 => count_where(s, |s, i| {
            let lower = s.low(i);
            let reporting = s.tag(i).is_verb()
                && (wl::PUBLIC.matches(lower, &s.tokens[i].lemma)
                    || wl::PRIVATE.matches(lower, &s.tokens[i].lemma)
                    || wl::SUASIVE.matches(lower, &s.tokens[i].lemma));
            if !reporting || i + 2 > s.len() {
                return false;
            }
            let j = i + 1;
            match s.tag(j) {
                // pronoun or proper-noun subject, then a verb
                PosTag::Prp | PosTag::Nnp => {
                    s.next_skipping_adverbs(j).is_some_and(|k| verbal(s.tag(k)))
                }
                // determiner-opened subject: DT (JJ|NN)* NN then a verb
                PosTag::Dt if s.low(j) != "that" => {
                    let mut k = j + 1;
                    let mut saw_noun = false;
                    while k < s.len() && k <= j + 3 {
                        if s.tag(k).is_noun() {
                            saw_noun = true;
                            k += 1;
                        } else if s.tag(k).is_adjective() {
                            k += 1;
                        } else {
                            break;
                        }
                    }
                    saw_noun && k < s.len() && verbal(s.tag(k))
                }
                _ => false,
            }
        }),
        61 => count_where(s, |s, i| {
            s.tag(i) == PosTag::In
                && !wl::SUBORDINATOR_WORDS.contains(s.low(i))
                && match s.tokens.get(i + 1) {
                    None => true,
                    Some(next) => clause_boundary(next.pos),
                }
        }),
        62 => count_where(s, |s, i| {
            if s.tag(i) != PosTag::To {
                return false;
            }
            let mut saw_adverb = false;
            for j in i + 1..s.len() {
                match s.tag(j) {
                    t if t.is_adverb() => saw_adverb = true,
                    PosTag::Vb | PosTag::Vbp => return saw_adverb,
                    _ => return false,
                }
                if j > i + 2 {
                    return false;
                }
            }
            false
        }),
        63 => count_where(s, |s, i| {
            let lower = s.low(i);
            let aux = s.tag(i) == PosTag::Md
                || ((BE_FORMS.contains(lower) || HAVE_FORMS.contains(lower) || DO_FORMS.contains(lower))
                    && verbal(s.tag(i)));
            if !aux {
                return false;
            }
            let mut saw_adverb = false;
            for j in i + 1..s.len() {
                match s.tag(j) {
                    t if t.is_adverb() && !matches!(s.low(j), "not" | "n't") => saw_adverb = true,
                    t if t.is_verb() => return saw_adverb,
                    _ => return false,
                }
                if j > i + 2 {
                    return false;
                }
            }
            false
        }),
        64 => count_where(s, |s, i| {
            if s.low(i) != "and" || i == 0 || i + 1 >= s.len() {
                return false;
            }
            let class = |t: PosTag| -> u8 {
                if t.is_noun() {
                    1
                } else if t.is_adjective() {
                    2
                } else if t.is_verb() {
                    3
                } else if t.is_adverb() {
                    4
                } else {
                    0
                }
            };
            let before = class(s.tag(i - 1));
            let after = class(s.tag(i + 1));
            before != 0 && before == after
        }),
        65 => count_where(s, |s, i| {
            s.low(i) == "and"
                && (i == 0 || matches!(s.tag(i - 1), PosTag::Comma | PosTag::MidPunct))
        }),
        66 => count_where(s, |s, i| {
            matches!(s.low(i), "neither" | "nor")
                || (s.low(i) == "no" && noun_phrase_head_next(s, i))
        }),
        67 => count_where(s, |s, i| matches!(s.low(i), "not" | "n't")),
        _ => 0,
    }
}
