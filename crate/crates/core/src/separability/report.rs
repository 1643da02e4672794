//! Plain-data form of a [`ConditionReport`], serializable as JSON or as
//! line-oriented text.
//!
//! Text layout:
//!
//! ```text
//! report <act-name>
//! condition <rf|wss|sss|cs>
//! holds <true|false>
//! counterexample none
//! certificates <n>
//! certificate element=<a> forbidden=<x,y,..> index=<k> classes=<0,1/2/3,4>
//! ```
//!
//! A failing report writes `counterexample element=<a> forbidden=<x,..>`.
//! Classes are separated by `/`, members by `,`.

use serde::{Deserialize, Serialize};

use super::{Condition, ConditionReport};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceRecord {
    pub element: usize,
    pub forbidden: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub element: usize,
    pub forbidden: Vec<usize>,
    pub index: usize,
    pub classes: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub act: String,
    pub condition: Condition,
    pub holds: bool,
    pub counterexample: Option<InstanceRecord>,
    pub certificates: Vec<CertificateRecord>,
}

impl ConditionReport {
    pub fn to_record(&self, act_name: &str) -> ReportRecord {
        ReportRecord {
            act: act_name.to_string(),
            condition: self.condition,
            holds: self.holds,
            counterexample: self.counterexample.as_ref().map(|(a, x)| InstanceRecord {
                element: *a,
                forbidden: x.clone(),
            }),
            certificates: self
                .certificates
                .iter()
                .map(|c| CertificateRecord {
                    element: c.element(),
                    forbidden: c.forbidden().to_vec(),
                    index: c.quotient_size(),
                    classes: c.congruence().blocks(),
                })
                .collect(),
        }
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn parse_list(s: &str, line: usize) -> Result<Vec<usize>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.parse().map_err(|_| Error::Parse {
                line,
                msg: format!("bad index {t:?}"),
            })
        })
        .collect()
}

fn field<'a>(tokens: &[&'a str], key: &str, line: usize) -> Result<&'a str> {
    tokens
        .iter()
        .find_map(|t| t.strip_prefix(key).and_then(|r| r.strip_prefix('=')))
        .ok_or_else(|| Error::Parse {
            line,
            msg: format!("missing {key}="),
        })
}

impl ReportRecord {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("report {}\n", self.act));
        out.push_str(&format!("condition {}\n", self.condition));
        out.push_str(&format!("holds {}\n", self.holds));
        match &self.counterexample {
            None => out.push_str("counterexample none\n"),
            Some(i) => out.push_str(&format!(
                "counterexample element={} forbidden={}\n",
                i.element,
                join(&i.forbidden)
            )),
        }
        out.push_str(&format!("certificates {}\n", self.certificates.len()));
        for c in &self.certificates {
            let classes: Vec<String> = c.classes.iter().map(|b| join(b)).collect();
            out.push_str(&format!(
                "certificate element={} forbidden={} index={} classes={}\n",
                c.element,
                join(&c.forbidden),
                c.index,
                classes.join("/")
            ));
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<ReportRecord> {
        let lines: Vec<(usize, Vec<&str>)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split_whitespace().collect::<Vec<_>>()))
            .filter(|(_, t)| !t.is_empty() && !t[0].starts_with('#'))
            .collect();
        let mut it = lines.into_iter();
        let mut next = |key: &str| -> Result<(usize, Vec<&str>)> {
            match it.next() {
                Some((n, t)) if t[0] == key => Ok((n, t)),
                Some((n, _)) => Err(Error::Parse {
                    line: n,
                    msg: format!("expected {key}"),
                }),
                None => Err(Error::Parse {
                    line: 0,
                    msg: format!("missing {key}"),
                }),
            }
        };
        let bad = |line: usize, msg: &str| Error::Parse {
            line,
            msg: msg.to_string(),
        };
        let (n, t) = next("report")?;
        let act = t
            .get(1)
            .ok_or_else(|| bad(n, "missing act name"))?
            .to_string();
        let (n, t) = next("condition")?;
        let condition: Condition = t
            .get(1)
            .ok_or_else(|| bad(n, "missing condition"))?
            .parse()
            .map_err(|_| bad(n, "unknown condition"))?;
        let (n, t) = next("holds")?;
        let holds = match t.get(1).copied() {
            Some("true") => true,
            Some("false") => false,
            _ => return Err(bad(n, "holds must be true or false")),
        };
        let (n, t) = next("counterexample")?;
        let counterexample = if t.get(1) == Some(&"none") {
            None
        } else {
            Some(InstanceRecord {
                element: field(&t, "element", n)?
                    .parse()
                    .map_err(|_| bad(n, "bad element"))?,
                forbidden: parse_list(field(&t, "forbidden", n)?, n)?,
            })
        };
        let (n, t) = next("certificates")?;
        let count: usize = t
            .get(1)
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| bad(n, "bad certificate count"))?;
        let mut certificates = Vec::with_capacity(count);
        for _ in 0..count {
            let (n, t) = next("certificate")?;
            let classes = field(&t, "classes", n)?
                .split('/')
                .map(|b| parse_list(b, n))
                .collect::<Result<Vec<_>>>()?;
            certificates.push(CertificateRecord {
                element: field(&t, "element", n)?
                    .parse()
                    .map_err(|_| bad(n, "bad element"))?,
                forbidden: parse_list(field(&t, "forbidden", n)?, n)?,
                index: field(&t, "index", n)?
                    .parse()
                    .map_err(|_| bad(n, "bad index"))?,
                classes,
            });
        }
        if let Some((n, _)) = it.next() {
            return Err(bad(n, "trailing content"));
        }
        Ok(ReportRecord {
            act,
            condition,
            holds,
            counterexample,
            certificates,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report records always serialize")
    }

    pub fn parse_json(text: &str) -> Result<ReportRecord> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            msg: e.to_string(),
        })
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::act::FiniteAct;
    use crate::congruence::SearchLimits;
    use crate::monoid::FiniteMonoid;
    use crate::separability::{check_condition, check_condition_bounded};

    #[test]
    fn text_and_json_agree() {
        let m = Arc::new(FiniteMonoid::adjoin_identity(&[vec![1, 1], vec![1, 1]]).unwrap());
        let act = FiniteAct::regular(m);
        for c in Condition::ALL {
            let rec = check_condition(&act, c, &SearchLimits::default())
                .unwrap()
                .to_record("null3");
            let from_text = ReportRecord::parse_text(&rec.to_text()).unwrap();
            let from_json = ReportRecord::parse_json(&rec.to_json()).unwrap();
            assert_eq!(from_text, rec);
            assert_eq!(from_json, rec);
        }
        let failing =
            check_condition_bounded(&act, Condition::Cs, Some(1), &SearchLimits::default())
                .unwrap()
                .to_record("null3");
        assert_eq!(
            ReportRecord::parse_text(&failing.to_text()).unwrap(),
            failing
        );
    }
}
