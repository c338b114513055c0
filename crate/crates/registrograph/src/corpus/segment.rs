//! Sentence segmentation over tokenized text.

use std::ops::Range;

use super::tokenize::SpannedToken;

/// Splits an ordered token stream into sentence index ranges. A boundary is
/// placed after sentence-final punctuation (. ! ? and ellipses); trailing
/// closing quotes and brackets stay with the finished sentence. Tokens that
/// kept an abbreviation period attached never trigger a boundary. Every
/// token lands in exactly one sentence.
pub fn segment_sentences(tokens: &[SpannedToken]) -> Vec<Range<usize>> {
    let mut sentences = Vec::new();
    let mut start = 0;
    let mut idx = 0;
    while idx < tokens.len() {
        if is_terminal(&tokens[idx].surface) {
            let mut end = idx + 1;
            while end < tokens.len() && is_closing(&tokens[end].surface) {
                end += 1;
            }
            sentences.push(start..end);
            start = end;
            idx = end;
        } else {
            idx += 1;
        }
    }
    if start < tokens.len() {
        sentences.push(start..tokens.len());
    }
    sentences
}

fn is_terminal(surface: &str) -> bool {
    matches!(surface, "." | "!" | "?" | "\u{2026}") || surface.len() >= 2 && surface.bytes().all(|b| b == b'.')
}

fn is_closing(surface: &str) -> bool {
    matches!(surface, "\"" | "'" | ")" | "]" | "}" | "\u{00bb}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::tokenize::tokenize;

    fn count(text: &str) -> usize {
        segment_sentences(&tokenize(text)).len()
    }

    #[test]
    fn empty_stream_has_no_sentences() {
        assert!(segment_sentences(&[]).is_empty());
    }

    #[test]
    fn terminal_periods_split() {
        assert_eq!(count("Hi. Bye."), 2);
        assert_eq!(count("One! Two? Three."), 3);
    }

    #[test]
    fn abbreviation_does_not_split() {
        assert_eq!(count("Dr. Smith left."), 1);
        assert_eq!(count("We met, e.g. on Tuesday."), 1);
    }

    #[test]
    fn trailing_quote_stays_with_sentence() {
        let tokens = tokenize("He said \"go.\" She left.");
        let sentences = segment_sentences(&tokens);
        assert_eq!(sentences.len(), 2);
        assert_eq!(tokens[sentences[0].clone()].last().unwrap().surface, "\"");
    }

    #[test]
    fn unterminated_tail_forms_last_sentence() {
        assert_eq!(count("First one ends. second never does"), 2);
    }

    #[test]
    fn every_token_in_exactly_one_sentence() {
        let tokens = tokenize("A b. C d! E?");
        let sentences = segment_sentences(&tokens);
        let covered: usize = sentences.iter().map(|r| r.len()).sum();
        assert_eq!(covered, tokens.len());
        for pair in sentences.windows(2) {
            assert_eq!(pair[0].end, pair[1].start);
        }
    }
}
