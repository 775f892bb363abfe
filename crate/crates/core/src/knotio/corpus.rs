use std::fs;
use std::path::Path;

use serde::Deserialize;

use super::dt::DTCode;
use super::{KnotIoError, Result};

/// One line of a JSON-lines corpus file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub dt: DTCode,
    pub expected_det: Option<u64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    name: String,
    dt: Vec<i64>,
    #[serde(default)]
    expected_det: Option<u64>,
}

/// Parses corpus text. Blank lines are skipped; line numbers are 1-based.
pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>> {
    let mut entries = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let parse_err = |message: String| KnotIoError::Parse {
            line: idx + 1,
            message,
        };
        let raw: RawEntry = serde_json::from_str(line).map_err(|e| parse_err(e.to_string()))?;
        let dt = DTCode::new(raw.dt).map_err(|e| parse_err(e.to_string()))?;
        entries.push(CorpusEntry {
            name: raw.name,
            dt,
            expected_det: raw.expected_det,
        });
    }
    Ok(entries)
}

pub fn load_corpus(path: impl AsRef<Path>) -> Result<Vec<CorpusEntry>> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| KnotIoError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_corpus(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_entry() {
        let c = parse_corpus(r#"{"name":"3_1","dt":[4,6,2]}"#).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].name, "3_1");
        assert_eq!(c[0].dt.entries(), &[4, 6, 2]);
        assert_eq!(c[0].expected_det, None);
    }

    #[test]
    fn entry_with_expectation() {
        let c = parse_corpus("{\"name\":\"4_1\",\"dt\":[4,6,8,2],\"expected_det\":5}\n").unwrap();
        assert_eq!(c[0].expected_det, Some(5));
    }

    #[test]
    fn empty_input_is_empty_corpus() {
        assert!(parse_corpus("").unwrap().is_empty());
        assert!(parse_corpus("\n\n").unwrap().is_empty());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let text = "{\"name\":\"3_1\",\"dt\":[4,6,2]}\n{\"name\":\"bad\",\"dt\":[3,6,2]}\n";
        match parse_corpus(text) {
            Err(KnotIoError::Parse { line, message }) => {
                assert_eq!(line, 2);
                assert!(message.contains("not even"), "{message}");
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_corpus("{\"name\":1}"),
            Err(KnotIoError::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn missing_file_is_io_error() {
        assert!(matches!(
            load_corpus("/nonexistent/corpus.jsonl"),
            Err(KnotIoError::Io { .. })
        ));
    }
}
