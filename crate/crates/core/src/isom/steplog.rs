//! Recording data of the canonical isomorphism, one step per line:
//!
//! ```text
//! RS p=3 Q=[[1,2,3,7,8],[4,5,6]]
//! XI k=1
//! PSI alpha=2
//! ```

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rsk::RecordingSymbol;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Step {
    /// `rs` at symbol size `p` with recording symbol `q`.
    Rs { p: i64, q: RecordingSymbol },
    /// `ξ^k`, `k ≠ 0`.
    Xi { k: i64 },
    /// `ψ` deleting a pseudoperiod of width `alpha`.
    Psi { alpha: usize },
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Rs { p, q } => {
                let rows = serde_json::to_string(q.rows()).map_err(|_| fmt::Error)?;
                write!(f, "RS p={p} Q={rows}")
            }
            Step::Xi { k } => write!(f, "XI k={k}"),
            Step::Psi { alpha } => write!(f, "PSI alpha={alpha}"),
        }
    }
}

fn field<'a>(tok: Option<&'a str>, key: &str, line: &str, offset: usize) -> Result<&'a str> {
    let tok = tok.ok_or_else(|| Error::parse(offset + line.len(), format!("missing `{key}=`")))?;
    tok.strip_prefix(key)
        .and_then(|t| t.strip_prefix('='))
        .ok_or_else(|| {
            let at = offset + (tok.as_ptr() as usize - line.as_ptr() as usize);
            Error::parse(at, format!("expected `{key}=`"))
        })
}

fn number<T: FromStr>(val: &str, line: &str, offset: usize) -> Result<T> {
    val.parse().map_err(|_| {
        let at = offset + (val.as_ptr() as usize - line.as_ptr() as usize);
        Error::parse(at, format!("invalid number `{val}`"))
    })
}

impl Step {
    /// Parses one line; `offset` is the byte position of the line in its file.
    pub fn parse_line(line: &str, offset: usize) -> Result<Step> {
        let mut toks = line.split_whitespace();
        let head = toks
            .next()
            .ok_or_else(|| Error::parse(offset, "empty step"))?;
        let step = match head {
            "RS" => {
                let p = number(field(toks.next(), "p", line, offset)?, line, offset)?;
                let qtext = field(toks.next(), "Q", line, offset)?;
                let qpos = offset + (qtext.as_ptr() as usize - line.as_ptr() as usize);
                let rows: Vec<Vec<usize>> = serde_json::from_str(qtext).map_err(|e| {
                    Error::parse(qpos + e.column().saturating_sub(1), e.to_string())
                })?;
                let q =
                    RecordingSymbol::new(rows).map_err(|e| Error::parse(qpos, e.to_string()))?;
                Step::Rs { p, q }
            }
            "XI" => {
                let k = number(field(toks.next(), "k", line, offset)?, line, offset)?;
                if k == 0 {
                    return Err(Error::parse(offset, "cyclage exponent must be nonzero"));
                }
                Step::Xi { k }
            }
            "PSI" => {
                let alpha = number(field(toks.next(), "alpha", line, offset)?, line, offset)?;
                if alpha == 0 {
                    return Err(Error::parse(offset, "pseudoperiod width must be positive"));
                }
                Step::Psi { alpha }
            }
            other => return Err(Error::parse(offset, format!("unknown step `{other}`"))),
        };
        if let Some(extra) = toks.next() {
            let at = offset + (extra.as_ptr() as usize - line.as_ptr() as usize);
            return Err(Error::parse(at, "unexpected trailing text"));
        }
        Ok(step)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct StepLog {
    pub steps: Vec<Step>,
}

impl StepLog {
    pub fn new(steps: Vec<Step>) -> Self {
        StepLog { steps }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Step> {
        self.steps.iter()
    }

    pub fn push(&mut self, step: Step) {
        self.steps.push(step);
    }

    /// Parses the line format; blank lines are ignored.
    pub fn parse(text: &str) -> Result<StepLog> {
        let mut steps = Vec::new();
        let mut offset = 0;
        for line in text.split('\n') {
            if !line.trim().is_empty() {
                steps.push(Step::parse_line(line.trim_end_matches('\r'), offset)?);
            }
            offset += line.len() + 1;
        }
        Ok(StepLog { steps })
    }
}

impl fmt::Display for StepLog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            writeln!(f, "{step}")?;
        }
        Ok(())
    }
}

impl FromStr for StepLog {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StepLog::parse(s)
    }
}

impl<'a> IntoIterator for &'a StepLog {
    type Item = &'a Step;
    type IntoIter = std::slice::Iter<'a, Step>;

    fn into_iter(self) -> Self::IntoIter {
        self.steps.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_and_parses() {
        let q = RecordingSymbol::new(vec![vec![1, 2, 3, 7, 8], vec![4, 5, 6]]).unwrap();
        let log = StepLog::new(vec![
            Step::Rs { p: 3, q },
            Step::Xi { k: -2 },
            Step::Psi { alpha: 2 },
        ]);
        let text = log.to_string();
        assert_eq!(
            text,
            "RS p=3 Q=[[1,2,3,7,8],[4,5,6]]\nXI k=-2\nPSI alpha=2\n"
        );
        assert_eq!(StepLog::parse(&text).unwrap(), log);
        assert_eq!(StepLog::parse("").unwrap(), StepLog::default());
        let empty_q = StepLog::parse("RS p=1 Q=[]\n").unwrap();
        assert_eq!(
            empty_q.steps[0],
            Step::Rs {
                p: 1,
                q: RecordingSymbol::default()
            }
        );
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(StepLog::parse("XI k=0"), Err(Error::Parse { .. })));
        assert!(matches!(StepLog::parse("XI\n"), Err(Error::Parse { .. })));
        assert!(matches!(
            StepLog::parse("PSI alpha=x"),
            Err(Error::Parse { pos: 10, .. })
        ));
        assert!(matches!(
            StepLog::parse("XI k=1\nFOO"),
            Err(Error::Parse { pos: 7, .. })
        ));
        assert!(matches!(
            StepLog::parse("RS p=1 Q=[[1,1]]"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            StepLog::parse("RS p=1 Q=[[1]] x"),
            Err(Error::Parse { pos: 15, .. })
        ));
    }
}
