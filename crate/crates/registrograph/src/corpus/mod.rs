//! Corpus ingestion: tokenization, sentence segmentation, POS annotation.

pub mod lexicon;
pub mod load;
pub mod segment;
pub mod tag;
pub mod tagger;
pub mod tokenize;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
pub use load::{load_corpus, CorpusFormat, LoadedCorpus};
pub use segment::segment_sentences;
pub use tag::PosTag;
pub use tagger::Tagger;
pub use tokenize::{tokenize, SpannedToken, Tokenizer};

/// An unprocessed document as read from disk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawDocument {
    pub id: String,
    pub text: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub register: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
}

impl RawDocument {
    /// Builds a document, normalizing the text. Errors if the text is empty
    /// after trimming.
    pub fn new(id: impl Into<String>, text: impl Into<String>) -> Result<Self> {
        let id = id.into();
        let text = normalize_text(&text.into());
        if text.trim().is_empty() {
            return Err(Error::EmptyText(id));
        }
        Ok(RawDocument { id, text, register: None, source: None })
    }

    pub fn with_register(mut self, register: impl Into<String>) -> Self {
        self.register = Some(register.into());
        self
    }
}

/// One POS-annotated token.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    pub surface: String,
    pub lemma: String,
    pub pos: PosTag,
    /// Byte offsets into the normalized document text.
    pub span: (usize, usize),
}

impl Token {
    /// Lowercased surface, cached in `lemma` only when a lemmatizer rule
    /// applied; detectors want the plain lowercase form often enough to
    /// warrant the helper.
    pub fn lower(&self) -> String {
        self.surface.to_lowercase()
    }

    pub fn is_alphabetic(&self) -> bool {
        !self.surface.is_empty() && self.surface.chars().all(|c| c.is_alphabetic() || c == '\'' || c == '-')
    }
}

/// Tokenized, sentence-segmented, POS-tagged document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnotatedDocument {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub register: Option<String>,
    pub sentences: Vec<Vec<Token>>,
    pub token_count: usize,
}

impl AnnotatedDocument {
    pub fn tokens(&self) -> impl Iterator<Item = &Token> {
        self.sentences.iter().flatten()
    }

    /// Checks the structural invariants: token count matches, sentences
    /// non-empty iff tokens exist, spans ordered and non-overlapping.
    pub fn check_invariants(&self) -> Result<()> {
        let total: usize = self.sentences.iter().map(|s| s.len()).sum();
        if total != self.token_count {
            return Err(Error::Malformed {
                id: self.id.clone(),
                offset: 0,
                message: format!("token_count {} != sentence sum {}", self.token_count, total),
            });
        }
        if self.sentences.iter().any(|s| s.is_empty()) {
            return Err(Error::Malformed {
                id: self.id.clone(),
                offset: 0,
                message: "empty sentence".into(),
            });
        }
        let mut prev_end = 0;
        for token in self.tokens() {
            if token.span.0 < prev_end || token.span.1 < token.span.0 {
                return Err(Error::Malformed {
                    id: self.id.clone(),
                    offset: token.span.0,
                    message: "token spans overlap or are unordered".into(),
                });
            }
            prev_end = token.span.1;
        }
        Ok(())
    }
}

/// Normalization applied at ingestion: curly apostrophes and quotes map to
/// their ASCII forms so contraction splitting is stable regardless of the
/// source's typography.
pub fn normalize_text(text: &str) -> String {
    text.chars()
        .map(|c| match c {
            '\u{2018}' | '\u{2019}' | '\u{201b}' | '\u{02bc}' => '\'',
            '\u{201c}' | '\u{201d}' | '\u{201f}' => '"',
            '\u{00a0}' => ' ',
            other => other,
        })
        .collect()
}

/// Runs the full annotation pipeline on one raw document.
pub fn annotate(raw: &RawDocument) -> AnnotatedDocument {
    annotate_with(raw, &Tokenizer::new(), &Tagger::new())
}

/// Annotation with explicit components, for configured abbreviation lists.
pub fn annotate_with(raw: &RawDocument, tokenizer: &Tokenizer, tagger: &Tagger) -> AnnotatedDocument {
    let spanned = tokenizer.tokenize(&raw.text);
    let ranges = segment_sentences(&spanned);
    let sentences: Vec<Vec<Token>> = ranges
        .into_iter()
        .map(|range| tagger.tag_sentence(&spanned[range]))
        .collect();
    let token_count = sentences.iter().map(|s| s.len()).sum();
    AnnotatedDocument {
        id: raw.id.clone(),
        register: raw.register.clone(),
        sentences,
        token_count,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_maps_curly_apostrophe() {
        assert_eq!(normalize_text("don\u{2019}t"), "don't");
        assert_eq!(normalize_text("\u{201c}hi\u{201d}"), "\"hi\"");
    }

    #[test]
    fn empty_text_is_rejected() {
        assert!(matches!(RawDocument::new("a", "  \n"), Err(Error::EmptyText(_))));
    }

    #[test]
    fn annotate_counts_tokens() {
        let raw = RawDocument::new("d1", "He walked. She ran.").unwrap();
        let doc = annotate(&raw);
        assert_eq!(doc.sentences.len(), 2);
        assert_eq!(doc.token_count, 6);
        doc.check_invariants().unwrap();
    }

    #[test]
    fn annotation_is_deterministic() {
        let raw = RawDocument::new("d1", "It seems fine, doesn't it? Yes.").unwrap();
        assert_eq!(annotate(&raw), annotate(&raw));
    }
}
