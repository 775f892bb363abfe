use std::fmt;

use super::gauss::{GaussCode, Pass, PassKind};
use super::{KnotIoError, Result};

/// Dowker-Thistlethwaite code: entry `i` is the even position paired with
/// odd position `2i+1` along the knot.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DTCode {
    entries: Vec<i64>,
}

impl DTCode {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(KnotIoError::EmptyInput);
        }
        let max = 2 * entries.len() as i64;
        let mut seen = vec![false; entries.len() + 1];
        for &e in &entries {
            if e % 2 != 0 {
                return Err(KnotIoError::NotEven(e));
            }
            let m = e.abs();
            if m < 2 || m > max {
                return Err(KnotIoError::WrongRange { entry: e, max });
            }
            let slot = &mut seen[(m / 2) as usize];
            if *slot {
                return Err(KnotIoError::DuplicateMagnitude(m));
            }
            *slot = true;
        }
        let positive = entries[0] > 0;
        if entries.iter().any(|&e| (e > 0) != positive) {
            return Err(KnotIoError::MixedSigns);
        }
        Ok(DTCode { entries })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn crossing_count(&self) -> usize {
        self.entries.len()
    }

    pub fn is_positive(&self) -> bool {
        self.entries[0] > 0
    }
}

impl fmt::Display for DTCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Parses whitespace- or comma-separated even integers.
pub fn parse_dt(text: &str) -> Result<DTCode> {
    let entries = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| KnotIoError::MalformedToken(t.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    DTCode::new(entries)
}

/// Expands a DT code into a Gauss code.
///
/// Positions `2i+1` and `|entries[i]|` (1-based) share a crossing. For an
/// all-positive code the odd positions pass over; an all-negative code
/// gives the mirror, with odd positions passing under.
pub fn dt_to_gauss(code: &DTCode) -> GaussCode {
    let n = code.crossing_count();
    let odd_kind = if code.is_positive() {
        PassKind::Over
    } else {
        PassKind::Under
    };
    let mut passes = vec![Pass::over(0); 2 * n];
    for (i, &e) in code.entries().iter().enumerate() {
        let label = i as u64 + 1;
        passes[2 * i] = Pass {
            label,
            kind: odd_kind,
        };
        passes[e.unsigned_abs() as usize - 1] = Pass {
            label,
            kind: odd_kind.flipped(),
        };
    }
    GaussCode::new(passes).expect("a valid DT code pairs every position once")
}

/// Re-derives the DT pairing from a Gauss code read from its first pass.
/// Fails if some crossing is met twice at odd (or twice at even) positions
/// or if the over/under pattern is not uniform across odd positions.
pub fn gauss_to_dt(code: &GaussCode) -> Result<DTCode> {
    let passes = code.passes();
    let n = code.crossing_count();
    let mut odd_pos = vec![None; n + 1];
    let mut even_pos = vec![None; n + 1];
    for (k, p) in passes.iter().enumerate() {
        let slot = if k % 2 == 0 {
            &mut odd_pos[p.label as usize]
        } else {
            &mut even_pos[p.label as usize]
        };
        if slot.is_some() {
            return Err(KnotIoError::NotDtRepresentable(format!(
                "crossing {} has both passes at the same parity",
                p.label
            )));
        }
        *slot = Some(k);
    }
    let odd_kind = passes[0].kind;
    let mut entries = Vec::with_capacity(n);
    for k in (0..passes.len()).step_by(2) {
        let p = passes[k];
        if p.kind != odd_kind {
            return Err(KnotIoError::NotDtRepresentable(
                "odd positions mix over and under passes".into(),
            ));
        }
        let even = even_pos[p.label as usize].expect("parity checked above") as i64 + 1;
        entries.push(if odd_kind == PassKind::Over {
            even
        } else {
            -even
        });
    }
    DTCode::new(entries)
}
