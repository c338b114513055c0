//! Corpus loading: plaintext directories, JSONL files, and CoNLL-style
//! pre-annotated files.

use std::collections::HashSet;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use serde::Deserialize;

use super::tag::PosTag;
use super::{AnnotatedDocument, RawDocument, Token};
use crate::error::{Error, Result};

/// On-disk corpus formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CorpusFormat {
    /// One document per `*.txt` file; id is the filename stem; registers
    /// come from an optional `registers.csv` sidecar (columns id,register).
    PlaintextDir,
    /// One JSON object per line with fields id (required), text (required),
    /// register (optional).
    Jsonl,
    /// Tab-separated token/lemma/pos lines, blank line between sentences,
    /// `# id = ...` comment starts a document. Supplied tags are trusted and
    /// the internal tagger is bypassed.
    Conll,
}

impl FromStr for CorpusFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "plaintext-dir" | "plaintext" | "txt" => Ok(CorpusFormat::PlaintextDir),
            "jsonl" => Ok(CorpusFormat::Jsonl),
            "conll" => Ok(CorpusFormat::Conll),
            other => Err(format!("unknown corpus format: {other}")),
        }
    }
}

impl std::fmt::Display for CorpusFormat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CorpusFormat::PlaintextDir => "plaintext-dir",
            CorpusFormat::Jsonl => "jsonl",
            CorpusFormat::Conll => "conll",
        })
    }
}

/// Loader output: raw documents for text formats, annotated documents for
/// the pre-tagged format.
#[derive(Debug, Clone)]
pub enum LoadedCorpus {
    Raw(Vec<RawDocument>),
    Annotated(Vec<AnnotatedDocument>),
}

impl LoadedCorpus {
    pub fn len(&self) -> usize {
        match self {
            LoadedCorpus::Raw(docs) => docs.len(),
            LoadedCorpus::Annotated(docs) => docs.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Loads a corpus, yielding documents in lexicographic id order.
pub fn load_corpus(path: &Path, format: CorpusFormat) -> Result<LoadedCorpus> {
    match format {
        CorpusFormat::PlaintextDir => Ok(LoadedCorpus::Raw(load_plaintext_dir(path)?)),
        CorpusFormat::Jsonl => Ok(LoadedCorpus::Raw(load_jsonl(path)?)),
        CorpusFormat::Conll => Ok(LoadedCorpus::Annotated(load_conll(path)?)),
    }
}

fn check_duplicates<'a>(ids: impl Iterator<Item = &'a str>) -> Result<()> {
    let mut seen = HashSet::new();
    for id in ids {
        if !seen.insert(id.to_string()) {
            return Err(Error::DuplicateId(id.to_string()));
        }
    }
    Ok(())
}

fn load_plaintext_dir(dir: &Path) -> Result<Vec<RawDocument>> {
    let mut registers = std::collections::HashMap::new();
    let sidecar = dir.join("registers.csv");
    if sidecar.is_file() {
        let mut reader = csv::Reader::from_path(&sidecar)?;
        for record in reader.deserialize::<RegisterRow>() {
            let row = record?;
            registers.insert(row.id, row.register);
        }
    }

    let mut docs = Vec::new();
    for entry in fs::read_dir(dir)? {
        let path = entry?.path();
        if path.extension().and_then(|e| e.to_str()) != Some("txt") {
            continue;
        }
        let stem = path
            .file_stem()
            .and_then(|s| s.to_str())
            .unwrap_or_default()
            .to_string();
        let text = fs::read_to_string(&path)?;
        let mut doc = RawDocument::new(stem.clone(), text)?;
        if let Some(register) = registers.get(&stem) {
            doc.register = Some(register.clone());
        }
        docs.push(doc);
    }
    docs.sort_by(|a, b| a.id.cmp(&b.id));
    check_duplicates(docs.iter().map(|d| d.id.as_str()))?;
    Ok(docs)
}

#[derive(Deserialize)]
struct RegisterRow {
    id: String,
    register: String,
}

#[derive(Deserialize)]
struct JsonlRecord {
    id: Option<String>,
    text: Option<String>,
    #[serde(default)]
    register: Option<String>,
    #[serde(default)]
    source: Option<String>,
}

fn load_jsonl(path: &Path) -> Result<Vec<RawDocument>> {
    let content = fs::read_to_string(path)?;
    let mut docs = Vec::new();
    let mut offset = 0usize;
    for (line_no, line) in content.lines().enumerate() {
        let line_offset = offset;
        offset += line.len() + 1;
        if line.trim().is_empty() {
            continue;
        }
        let record: JsonlRecord =
            serde_json::from_str(line).map_err(|e| Error::Malformed {
                id: format!("line {}", line_no + 1),
                offset: line_offset,
                message: e.to_string(),
            })?;
        let id = record.id.ok_or(Error::MissingField {
            id: format!("line {}", line_no + 1),
            field: "id",
        })?;
        let text = record.text.ok_or(Error::MissingField {
            id: id.clone(),
            field: "text",
        })?;
        let mut doc = RawDocument::new(id, text)?;
        doc.register = record.register;
        doc.source = record.source;
        docs.push(doc);
    }
    docs.sort_by(|a, b| a.id.cmp(&b.id));
    check_duplicates(docs.iter().map(|d| d.id.as_str()))?;
    Ok(docs)
}

fn load_conll(path: &Path) -> Result<Vec<AnnotatedDocument>> {
    let content = fs::read_to_string(path)?;
    let mut docs: Vec<AnnotatedDocument> = Vec::new();
    let mut current: Option<AnnotatedDocument> = None;
    let mut sentence: Vec<Token> = Vec::new();
    let mut span_cursor = 0usize;
    let mut offset = 0usize;

    fn flush_sentence(doc: &mut Option<AnnotatedDocument>, sentence: &mut Vec<Token>) {
        if let (Some(doc), false) = (doc.as_mut(), sentence.is_empty()) {
            doc.token_count += sentence.len();
            doc.sentences.push(std::mem::take(sentence));
        }
    }

    for line in content.lines() {
        let line_offset = offset;
        offset += line.len() + 1;
        let trimmed = line.trim_end();
        if let Some(rest) = trimmed.strip_prefix("# id =") {
            flush_sentence(&mut current, &mut sentence);
            if let Some(done) = current.take() {
                docs.push(done);
            }
            current = Some(AnnotatedDocument {
                id: rest.trim().to_string(),
                register: None,
                sentences: Vec::new(),
                token_count: 0,
            });
            span_cursor = 0;
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix("# register =") {
            if let Some(doc) = current.as_mut() {
                doc.register = Some(rest.trim().to_string());
            }
            continue;
        }
        if trimmed.starts_with('#') {
            continue;
        }
        if trimmed.is_empty() {
            flush_sentence(&mut current, &mut sentence);
            continue;
        }
        let doc_id = current
            .as_ref()
            .map(|d| d.id.clone())
            .ok_or_else(|| Error::Malformed {
                id: "<none>".into(),
                offset: line_offset,
                message: "token line before any '# id =' header".into(),
            })?;
        let mut fields = trimmed.split('\t');
        let surface = fields.next().unwrap_or_default();
        let lemma = fields.next();
        let pos = fields.next();
        let (lemma, pos) = match (lemma, pos) {
            (Some(lemma), Some(pos)) => (lemma, pos),
            _ => {
                return Err(Error::Malformed {
                    id: doc_id,
                    offset: line_offset,
                    message: format!("expected token\\tlemma\\tpos, got {trimmed:?}"),
                })
            }
        };
        let pos: PosTag = pos.parse().map_err(|e| Error::Malformed {
            id: doc_id.clone(),
            offset: line_offset,
            message: e,
        })?;
        let start = span_cursor;
        let end = start + surface.len();
        span_cursor = end + 1;
        sentence.push(Token {
            surface: surface.to_string(),
            lemma: lemma.to_string(),
            pos,
            span: (start, end),
        });
    }
    flush_sentence(&mut current, &mut sentence);
    if let Some(done) = current.take() {
        docs.push(done);
    }
    docs.sort_by(|a, b| a.id.cmp(&b.id));
    check_duplicates(docs.iter().map(|d| d.id.as_str()))?;
    Ok(docs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    #[test]
    fn plaintext_dir_loads_sorted_with_registers() {
        let dir = tempfile::tempdir().unwrap();
        for (name, text) in [("b", "Second doc."), ("a", "First doc."), ("c", "Third doc.")] {
            std::fs::write(dir.path().join(format!("{name}.txt")), text).unwrap();
        }
        std::fs::write(dir.path().join("registers.csv"), "id,register\na,personal blog\n").unwrap();
        std::fs::write(dir.path().join("notes.md"), "ignored").unwrap();

        let LoadedCorpus::Raw(docs) = load_corpus(dir.path(), CorpusFormat::PlaintextDir).unwrap()
        else {
            panic!("expected raw docs")
        };
        assert_eq!(docs.len(), 3);
        assert_eq!(docs[0].id, "a");
        assert_eq!(docs[0].register.as_deref(), Some("personal blog"));
        assert_eq!(docs[1].id, "b");
        assert!(docs[1].register.is_none());
    }

    #[test]
    fn jsonl_maps_fields() {
        let mut file = tempfile::NamedTempFile::new().unwrap();
        writeln!(file, "{{\"id\":\"a\",\"text\":\"Hi.\"}}").unwrap();
        writeln!(file, "{{\"id\":\"b\",\"text\":\"Yo.\",\"register\":\"chat\"}}").unwrap();
        let LoadedCorpus::Raw(docs) = load_corpus(file.path(), CorpusFormat::Jsonl).unwrap()
        else {
            panic!("expected raw docs")
        };
        assert_eq!(docs[0].id, "a");
        assert_eq!(docs[0].text, "Hi.");
        assert_eq!(docs[1].register.as_deref(), Some("chat"));
    }

    #[test]
    fn jsonl_missing_text_errors() {
        let mut file = tempfile::NamedTempFile::new().unwrap();
        writeln!(file, "{{\"id\":\"a\"}}").unwrap();
        let err = load_corpus(file.path(), CorpusFormat::Jsonl).unwrap_err();
        assert!(err.to_string().contains("missing field: text"), "{err}");
    }

    #[test]
    fn jsonl_duplicate_id_errors() {
        let mut file = tempfile::NamedTempFile::new().unwrap();
        writeln!(file, "{{\"id\":\"a\",\"text\":\"Hi.\"}}").unwrap();
        writeln!(file, "{{\"id\":\"a\",\"text\":\"Again.\"}}").unwrap();
        let err = load_corpus(file.path(), CorpusFormat::Jsonl).unwrap_err();
        assert!(matches!(err, Error::DuplicateId(id) if id == "a"));
    }

    #[test]
    fn conll_roundtrip() {
        let mut file = tempfile::NamedTempFile::new().unwrap();
        write!(
            file,
            "# id = doc1\n# register = news\nHe\the\tPRP\nwalked\twalk\tVBD\n.\t.\t.\n\nShe\tshe\tPRP\nran\trun\tVBD\n.\t.\t.\n"
        )
        .unwrap();
        let LoadedCorpus::Annotated(docs) = load_corpus(file.path(), CorpusFormat::Conll).unwrap()
        else {
            panic!("expected annotated docs")
        };
        assert_eq!(docs.len(), 1);
        assert_eq!(docs[0].sentences.len(), 2);
        assert_eq!(docs[0].token_count, 6);
        assert_eq!(docs[0].register.as_deref(), Some("news"));
        assert_eq!(docs[0].sentences[0][1].pos, PosTag::Vbd);
        docs[0].check_invariants().unwrap();
    }

    #[test]
    fn conll_bad_tag_names_doc_and_offset() {
        let mut file = tempfile::NamedTempFile::new().unwrap();
        write!(file, "# id = doc1\nHe\the\tZZZ\n").unwrap();
        let err = load_corpus(file.path(), CorpusFormat::Conll).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("doc1") && msg.contains("byte 12"), "{msg}");
    }
}
