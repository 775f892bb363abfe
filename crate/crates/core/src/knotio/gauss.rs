use std::collections::HashMap;
use std::fmt;

use super::{KnotIoError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PassKind {
    Over,
    Under,
}

impl PassKind {
    pub fn flipped(self) -> Self {
        match self {
            PassKind::Over => PassKind::Under,
            PassKind::Under => PassKind::Over,
        }
    }
}

/// One pass of the strand through a crossing. Labels are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Pass {
    pub label: u64,
    pub kind: PassKind,
}

impl Pass {
    pub fn over(label: u64) -> Self {
        Pass {
            label,
            kind: PassKind::Over,
        }
    }

    pub fn under(label: u64) -> Self {
        Pass {
            label,
            kind: PassKind::Under,
        }
    }
}

impl fmt::Display for Pass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            PassKind::Over => 'O',
            PassKind::Under => 'U',
        };
        write!(f, "{k}{}", self.label)
    }
}

/// A validated Gauss code with labels `1..=n` in order of first appearance.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussCode {
    passes: Vec<Pass>,
}

impl GaussCode {
    /// Validates and renumbers an arbitrary pass sequence.
    pub fn new(passes: Vec<Pass>) -> Result<Self> {
        if passes.is_empty() {
            return Err(KnotIoError::EmptyInput);
        }
        // label -> (overs, unders), in first-appearance order
        let mut counts: HashMap<u64, (usize, usize)> = HashMap::new();
        let mut order = Vec::new();
        for p in &passes {
            let e = counts.entry(p.label).or_insert_with(|| {
                order.push(p.label);
                (0, 0)
            });
            match p.kind {
                PassKind::Over => e.0 += 1,
                PassKind::Under => e.1 += 1,
            }
        }
        if let Some(&bad) = order.iter().find(|l| counts[*l] != (1, 1)) {
            return Err(KnotIoError::LabelCountMismatch(bad));
        }
        let relabel: HashMap<u64, u64> = order
            .iter()
            .enumerate()
            .map(|(i, &l)| (l, i as u64 + 1))
            .collect();
        let passes = passes
            .into_iter()
            .map(|p| Pass {
                label: relabel[&p.label],
                kind: p.kind,
            })
            .collect();
        Ok(GaussCode { passes })
    }

    pub fn passes(&self) -> &[Pass] {
        &self.passes
    }

    pub fn crossing_count(&self) -> usize {
        self.passes.len() / 2
    }

    /// The same closed curve read starting at pass `start`.
    pub fn rotated(&self, start: usize) -> GaussCode {
        let mut passes = self.passes.clone();
        let len = passes.len();
        passes.rotate_left(start % len);
        GaussCode::new(passes).expect("rotation preserves validity")
    }

    /// Every crossing switched.
    pub fn flipped(&self) -> GaussCode {
        let passes = self
            .passes
            .iter()
            .map(|p| Pass {
                label: p.label,
                kind: p.kind.flipped(),
            })
            .collect();
        GaussCode::new(passes).expect("flipping preserves validity")
    }

    /// `self` followed by `other` with its labels shifted past ours.
    pub fn concat(&self, other: &GaussCode) -> GaussCode {
        let offset = self.crossing_count() as u64;
        let passes = self
            .passes
            .iter()
            .copied()
            .chain(other.passes.iter().map(|p| Pass {
                label: p.label + offset,
                kind: p.kind,
            }))
            .collect();
        GaussCode::new(passes).expect("disjoint labels stay valid")
    }

    /// Over and under passes strictly alternate around the closed curve.
    pub fn is_alternating(&self) -> bool {
        let n = self.passes.len();
        (0..n).all(|k| self.passes[k].kind != self.passes[(k + 1) % n].kind)
    }
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.passes.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

fn parse_token(tok: &str) -> Result<Pass> {
    let malformed = || KnotIoError::MalformedToken(tok.to_string());
    let body = tok.strip_suffix(['+', '-']).unwrap_or(tok);
    let mut chars = body.chars();
    let kind = match chars.next().map(|c| c.to_ascii_uppercase()) {
        Some('O') => PassKind::Over,
        Some('U') => PassKind::Under,
        _ => return Err(malformed()),
    };
    let digits = chars.as_str();
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(malformed());
    }
    let label: u64 = digits.parse().map_err(|_| malformed())?;
    if label == 0 {
        return Err(malformed());
    }
    Ok(Pass { label, kind })
}

/// Parses whitespace-separated `O<k>` / `U<k>` tokens. A trailing crossing
/// sign (`+` or `-`) on a token is accepted and dropped.
pub fn parse_gauss(text: &str) -> Result<GaussCode> {
    let passes = text
        .split_whitespace()
        .map(parse_token)
        .collect::<Result<Vec<_>>>()?;
    GaussCode::new(passes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_code_renumbers_by_first_appearance() {
        let g = parse_gauss("O2 U1 O3 U2 O1 U3").unwrap();
        assert_eq!(g.crossing_count(), 3);
        assert_eq!(g.passes().len(), 6);
        assert_eq!(g.to_string(), "O1 U2 O3 U1 O2 U3");
    }

    #[test]
    fn kink_code_is_accepted() {
        let g = parse_gauss("O1 U1").unwrap();
        assert_eq!(g.crossing_count(), 1);
    }

    #[test]
    fn signs_and_case_are_tolerated() {
        let g = parse_gauss("o1+ u2- O3+ u1 o2 U3-").unwrap();
        assert_eq!(g.to_string(), "O1 U2 O3 U1 O2 U3");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_gauss("O1 U2"),
            Err(KnotIoError::LabelCountMismatch(1))
        ));
        assert!(matches!(
            parse_gauss("O1 O1"),
            Err(KnotIoError::LabelCountMismatch(1))
        ));
        assert!(matches!(parse_gauss("   "), Err(KnotIoError::EmptyInput)));
        for bad in ["X1 U1", "O U1", "O1a U1", "O0 U0", "O-1 U1"] {
            assert!(
                matches!(parse_gauss(bad), Err(KnotIoError::MalformedToken(_))),
                "{bad}"
            );
        }
    }

    #[test]
    fn alternation() {
        assert!(parse_gauss("O1 U2 O3 U1 O2 U3").unwrap().is_alternating());
        assert!(!parse_gauss("O1 O2 U1 U2").unwrap().is_alternating());
    }
}
