//! Span-preserving word tokenizer.
//!
//! Surfaces are exact byte slices of the input, so concatenating surfaces
//! with the original inter-token gaps reconstructs the text. Contractions
//! split into host + clitic (don't -> do + n't) and known abbreviations keep
//! their trailing period attached.

use std::collections::HashSet;

use super::lexicon::ABBREVIATION_SET;

/// A surface form plus its byte span in the source text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpannedToken {
    pub surface: String,
    pub span: (usize, usize),
}

impl SpannedToken {
    fn new(text: &str, start: usize, end: usize) -> Self {
        SpannedToken {
            surface: text[start..end].to_string(),
            span: (start, end),
        }
    }
}

/// Word tokenizer with a configurable abbreviation lexicon.
#[derive(Debug, Clone)]
pub struct Tokenizer {
    abbreviations: HashSet<String>,
}

impl Default for Tokenizer {
    fn default() -> Self {
        Tokenizer {
            abbreviations: ABBREVIATION_SET.iter().map(|s| s.to_string()).collect(),
        }
    }
}

impl Tokenizer {
    pub fn new() -> Self {
        Self::default()
    }

    /// Extends the bundled abbreviation list. Entries are matched
    /// case-insensitively and must include the trailing period.
    pub fn with_extra_abbreviations<I, S>(mut self, extra: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        for abbr in extra {
            self.abbreviations.insert(abbr.into().to_lowercase());
        }
        self
    }

    pub fn is_abbreviation(&self, word: &str) -> bool {
        self.abbreviations.contains(&word.to_lowercase())
    }

    /// Splits `text` into tokens with byte spans. Empty input yields an
    /// empty list.
    pub fn tokenize(&self, text: &str) -> Vec<SpannedToken> {
        let mut tokens = Vec::new();
        let bytes = text.as_bytes();
        let mut chunk_start = None;
        for (idx, ch) in text.char_indices() {
            if ch.is_whitespace() {
                if let Some(start) = chunk_start.take() {
                    self.split_chunk(text, start, idx, &mut tokens);
                }
            } else if chunk_start.is_none() {
                chunk_start = Some(idx);
            }
        }
        if let Some(start) = chunk_start {
            self.split_chunk(text, start, bytes.len(), &mut tokens);
        }
        tokens
    }

    /// Splits one whitespace-delimited chunk into word and punctuation
    /// tokens.
    fn split_chunk(&self, text: &str, start: usize, end: usize, out: &mut Vec<SpannedToken>) {
        let mut lo = start;
        let mut hi = end;

        // Peel leading punctuation, one char per token; dot runs of 2+
        // become a single ellipsis token.
        while lo < hi {
            let ch = text[lo..hi].chars().next().unwrap();
            if is_word_char(ch) {
                break;
            }
            if ch == '.' {
                let run = text[lo..hi].bytes().take_while(|&b| b == b'.').count();
                if run >= 2 {
                    out.push(SpannedToken::new(text, lo, lo + run));
                    lo += run;
                    continue;
                }
            }
            out.push(SpannedToken::new(text, lo, lo + ch.len_utf8()));
            lo += ch.len_utf8();
        }
        if lo >= hi {
            return;
        }

        // Peel trailing punctuation into a pending stack; terminal-period
        // handling below may claim one period back for abbreviations.
        let mut trailing: Vec<(usize, usize)> = Vec::new();
        loop {
            let ch = text[lo..hi].chars().next_back().unwrap();
            if is_word_char(ch) || ch == '.' {
                break;
            }
            trailing.push((hi - ch.len_utf8(), hi));
            hi -= ch.len_utf8();
            if lo >= hi {
                break;
            }
        }

        if lo < hi {
            // Trailing dots: a run of 2+ stays one ellipsis token; a single
            // dot splits off unless the word is a known abbreviation or a
            // dotted acronym (e.g., U.S.).
            let core = &text[lo..hi];
            let dot_run = core.len() - core.trim_end_matches('.').len();
            if dot_run >= 2 && dot_run < core.len() {
                trailing.push((hi - dot_run, hi));
                hi -= dot_run;
            } else if dot_run == 1 {
                let keeps_period = self.is_abbreviation(core) || is_dotted_acronym(core);
                if !keeps_period {
                    trailing.push((hi - 1, hi));
                    hi -= 1;
                }
            }
        }

        if lo < hi {
            self.split_word(text, lo, hi, out);
        }
        for &(s, e) in trailing.iter().rev() {
            out.push(SpannedToken::new(text, s, e));
        }
    }

    /// Splits contractions and possessives off a word.
    fn split_word(&self, text: &str, lo: usize, hi: usize, out: &mut Vec<SpannedToken>) {
        let word = &text[lo..hi];
        let lower = word.to_lowercase();

        // n't hosts: don't -> do + n't (also can't, won't, shan't, ain't)
        if lower.len() > 3 && lower.ends_with("n't") {
            let cut = hi - 3;
            out.push(SpannedToken::new(text, lo, cut));
            out.push(SpannedToken::new(text, cut, hi));
            return;
        }
        // enclitics: 's 're 've 'll 'd 'm
        for clitic in ["'re", "'ve", "'ll", "'s", "'d", "'m"] {
            if lower.len() > clitic.len() && lower.ends_with(clitic) {
                let cut = hi - clitic.len();
                self.split_word(text, lo, cut, out);
                out.push(SpannedToken::new(text, cut, hi));
                return;
            }
        }
        // bare trailing apostrophe (plural possessive: dogs')
        if lower.len() > 1 && lower.ends_with('\'') {
            out.push(SpannedToken::new(text, lo, hi - 1));
            out.push(SpannedToken::new(text, hi - 1, hi));
            return;
        }
        out.push(SpannedToken::new(text, lo, hi));
    }
}

fn is_word_char(ch: char) -> bool {
    ch.is_alphanumeric() || ch == '\'' || ch == '-' || ch == '_'
}

/// Strict letter-dot alternations ending in a dot, like U.S. or e.g.
fn is_dotted_acronym(word: &str) -> bool {
    let mut chars = word.chars();
    loop {
        match chars.next() {
            Some(c) if c.is_alphabetic() => {}
            _ => return false,
        }
        match chars.next() {
            Some('.') => {}
            _ => return false,
        }
        if chars.as_str().is_empty() {
            return true;
        }
    }
}

/// Tokenizes with the default abbreviation lexicon.
pub fn tokenize(text: &str) -> Vec<SpannedToken> {
    Tokenizer::new().tokenize(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surfaces(text: &str) -> Vec<String> {
        tokenize(text).into_iter().map(|t| t.surface).collect()
    }

    #[test]
    fn empty_input_yields_no_tokens() {
        assert!(tokenize("").is_empty());
        assert!(tokenize("   \n\t").is_empty());
    }

    #[test]
    fn contraction_splits_into_host_and_clitic() {
        let toks = tokenize("don't");
        assert_eq!(
            toks,
            vec![
                SpannedToken { surface: "do".into(), span: (0, 2) },
                SpannedToken { surface: "n't".into(), span: (2, 5) },
            ]
        );
    }

    #[test]
    fn simple_sentence() {
        assert_eq!(surfaces("He walked."), vec!["He", "walked", "."]);
    }

    #[test]
    fn more_contractions() {
        assert_eq!(surfaces("won't"), vec!["wo", "n't"]);
        assert_eq!(surfaces("it's"), vec!["it", "'s"]);
        assert_eq!(surfaces("I'll they're we've I'd I'm"),
            vec!["I", "'ll", "they", "'re", "we", "'ve", "I", "'d", "I", "'m"]);
        assert_eq!(surfaces("dogs'"), vec!["dogs", "'"]);
    }

    #[test]
    fn abbreviations_keep_their_period() {
        assert_eq!(surfaces("Dr. Smith left."), vec!["Dr.", "Smith", "left", "."]);
        assert_eq!(surfaces("e.g. this"), vec!["e.g.", "this"]);
        assert_eq!(surfaces("the U.S. army"), vec!["the", "U.S.", "army"]);
    }

    #[test]
    fn punctuation_peels_off() {
        assert_eq!(surfaces("(yes!)"), vec!["(", "yes", "!", ")"]);
        assert_eq!(surfaces("\"Hi,\" he said..."), vec!["\"", "Hi", ",", "\"", "he", "said", "..."]);
        assert_eq!(surfaces("wait: 3.14 is pi"), vec!["wait", ":", "3.14", "is", "pi"]);
    }

    #[test]
    fn spans_reconstruct_source() {
        let text = "She said, \"don't go.\"  Ok?";
        let toks = tokenize(text);
        for t in &toks {
            assert_eq!(&text[t.span.0..t.span.1], t.surface);
        }
        // non-overlapping and ordered
        for pair in toks.windows(2) {
            assert!(pair[0].span.1 <= pair[1].span.0);
        }
    }
}
