//! Line-oriented text formats for monoids, acts, partial acts, congruences
//! and separation certificates.
//!
//! ```text
//! monoid null3          act reg              congruence reg
//! order 3               monoid null3         classes 2
//! identity 0            size 3               0
//! labels 1 s z          table                1 2
//! table                 0 1 2
//! 0 1 2                 1 2 2
//! 1 2 2                 2 2 2
//! 2 2 2
//! ```
//!
//! Partial acts use the header `partialact` and `-` for undefined entries. A
//! certificate is a `separates <a> from <x> <y> ..` line followed by a
//! congruence. Lines starting with `#` and blank lines are skipped.

use std::sync::Arc;

use crate::act::{FiniteAct, PartialAct};
use crate::error::{Error, Result};
use crate::monoid::FiniteMonoid;
use crate::partition::Partition;
use crate::separability::SeparationCertificate;

struct Lines<'a> {
    lines: Vec<(usize, Vec<&'a str>)>,
    pos: usize,
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split_whitespace().collect::<Vec<_>>()))
            .filter(|(_, t)| !t.is_empty() && !t[0].starts_with('#'))
            .collect();
        Lines { lines, pos: 0 }
    }

    fn peek_key(&self) -> Option<&'a str> {
        self.lines.get(self.pos).map(|(_, t)| t[0])
    }

    fn last_line(&self) -> usize {
        self.lines.last().map_or(0, |(n, _)| *n)
    }

    fn next_line(&mut self, what: &str) -> Result<(usize, Vec<&'a str>)> {
        let line = self
            .lines
            .get(self.pos)
            .cloned()
            .ok_or_else(|| err(self.last_line(), format!("missing {what}")))?;
        self.pos += 1;
        Ok(line)
    }

    /// A `key value..` line; returns the values.
    fn keyed(&mut self, key: &str) -> Result<(usize, Vec<&'a str>)> {
        let (n, t) = self.next_line(key)?;
        if t[0] != key {
            return Err(err(n, format!("expected `{key}`, found `{}`", t[0])));
        }
        Ok((n, t[1..].to_vec()))
    }

    fn single(&mut self, key: &str) -> Result<(usize, &'a str)> {
        let (n, v) = self.keyed(key)?;
        match v.as_slice() {
            [x] => Ok((n, x)),
            _ => Err(err(n, format!("`{key}` takes one value"))),
        }
    }

    fn number(&mut self, key: &str) -> Result<usize> {
        let (n, v) = self.single(key)?;
        v.parse().map_err(|_| err(n, format!("bad {key} {v:?}")))
    }

    fn labels(&mut self, count: usize) -> Result<Option<Vec<String>>> {
        if self.peek_key() != Some("labels") {
            return Ok(None);
        }
        let (n, v) = self.keyed("labels")?;
        if v.len() != count {
            return Err(err(n, format!("{} labels for {count} elements", v.len())));
        }
        Ok(Some(v.iter().map(|s| s.to_string()).collect()))
    }

    fn finish(&self) -> Result<()> {
        match self.lines.get(self.pos) {
            Some((n, _)) => Err(err(*n, "trailing content")),
            None => Ok(()),
        }
    }
}

fn index(tok: &str, line: usize) -> Result<usize> {
    tok.parse()
        .map_err(|_| err(line, format!("bad index {tok:?}")))
}

fn table_rows<T>(
    lines: &mut Lines,
    rows: usize,
    cols: usize,
    cell: impl Fn(&str, usize) -> Result<T>,
) -> Result<Vec<Vec<T>>> {
    lines.keyed("table")?;
    (0..rows)
        .map(|_| {
            let (n, t) = lines.next_line("table row")?;
            if t.len() != cols {
                return Err(err(
                    n,
                    format!("expected {cols} entries, found {}", t.len()),
                ));
            }
            t.iter().map(|x| cell(x, n)).collect()
        })
        .collect()
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn name_of(v: &[&str], key: &str, line: usize) -> Result<String> {
    match v {
        [name] => Ok(name.to_string()),
        _ => Err(err(line, format!("`{key}` takes one name"))),
    }
}

pub fn write_monoid(name: &str, m: &FiniteMonoid) -> String {
    let mut out = format!(
        "monoid {name}\norder {}\nidentity {}\n",
        m.order(),
        m.identity()
    );
    if let Some(labels) = m.labels() {
        out.push_str(&format!("labels {}\n", labels.join(" ")));
    }
    out.push_str("table\n");
    for row in m.rows() {
        out.push_str(&join(row));
        out.push('\n');
    }
    out
}

/// Parses and fully validates a monoid; returns its name too.
pub fn parse_monoid(text: &str) -> Result<(String, FiniteMonoid)> {
    let mut lines = Lines::new(text);
    let (n, v) = lines.keyed("monoid")?;
    let name = name_of(&v, "monoid", n)?;
    let order = lines.number("order")?;
    let identity = lines.number("identity")?;
    let labels = lines.labels(order)?;
    let rows = table_rows(&mut lines, order, order, index)?;
    lines.finish()?;
    let mut m = FiniteMonoid::from_table(&rows, identity)?;
    if let Some(l) = labels {
        m = m.with_labels(l)?;
    }
    Ok((name, m))
}

fn act_header(
    kind: &str,
    name: &str,
    monoid_name: &str,
    size: usize,
    labels: Option<&[String]>,
) -> String {
    let mut out = format!("{kind} {name}\nmonoid {monoid_name}\nsize {size}\n");
    if let Some(l) = labels {
        out.push_str(&format!("labels {}\n", l.join(" ")));
    }
    out.push_str("table\n");
    out
}

pub fn write_act(name: &str, monoid_name: &str, act: &FiniteAct) -> String {
    let mut out = act_header("act", name, monoid_name, act.size(), act.labels());
    for row in act.rows() {
        out.push_str(&join(row));
        out.push('\n');
    }
    out
}

pub fn write_partial_act(name: &str, monoid_name: &str, act: &PartialAct) -> String {
    let mut out = act_header("partialact", name, monoid_name, act.size(), act.labels());
    for row in act.rows() {
        out.push_str(&join(
            row.iter()
                .map(|x| x.map_or_else(|| "-".to_string(), |v| v.to_string())),
        ));
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone)]
pub enum ParsedAct {
    Total(FiniteAct),
    Partial(PartialAct),
}

/// Parses an act or partial act over `monoid`, whose file declared
/// `monoid_name`. The act's `monoid` line must match that name.
pub fn parse_act(
    text: &str,
    monoid: Arc<FiniteMonoid>,
    monoid_name: &str,
) -> Result<(String, ParsedAct)> {
    let mut lines = Lines::new(text);
    let (n, t) = lines.next_line("act header")?;
    let partial = match t[0] {
        "act" => false,
        "partialact" => true,
        other => {
            return Err(err(
                n,
                format!("expected `act` or `partialact`, found `{other}`"),
            ))
        }
    };
    let name = name_of(&t[1..], t[0], n)?;
    let (n, v) = lines.keyed("monoid")?;
    let declared = name_of(&v, "monoid", n)?;
    if declared != monoid_name {
        return Err(err(
            n,
            format!("act is over `{declared}` but the monoid file is `{monoid_name}`"),
        ));
    }
    let size = lines.number("size")?;
    let labels = lines.labels(size)?;
    let order = monoid.order();
    let act = if partial {
        let rows = table_rows(&mut lines, size, order, |tok, line| {
            if tok == "-" {
                Ok(None)
            } else {
                index(tok, line).map(Some)
            }
        })?;
        lines.finish()?;
        let mut a = PartialAct::from_table(monoid, &rows)?;
        if let Some(l) = labels {
            a = a.with_labels(l)?;
        }
        ParsedAct::Partial(a)
    } else {
        let rows = table_rows(&mut lines, size, order, index)?;
        lines.finish()?;
        let mut a = FiniteAct::from_table(monoid, &rows)?;
        if let Some(l) = labels {
            a = a.with_labels(l)?;
        }
        ParsedAct::Total(a)
    };
    Ok((name, act))
}

/// Blocks sorted by least member, members sorted.
pub fn write_congruence(act_name: &str, p: &Partition) -> String {
    let blocks = p.blocks();
    let mut out = format!("congruence {act_name}\nclasses {}\n", blocks.len());
    for b in blocks {
        out.push_str(&join(b));
        out.push('\n');
    }
    out
}

fn parse_classes(lines: &mut Lines) -> Result<Partition> {
    let k = lines.number("classes")?;
    let mut blocks = Vec::with_capacity(k);
    for _ in 0..k {
        let (n, t) = lines.next_line("class")?;
        blocks.push((
            n,
            t.iter().map(|x| index(x, n)).collect::<Result<Vec<_>>>()?,
        ));
    }
    lines.finish()?;
    let size = blocks.iter().map(|(_, b)| b.len()).sum();
    let mut seen = vec![false; size];
    for (n, b) in &blocks {
        for &x in b {
            if x >= size || std::mem::replace(&mut seen[x], true) {
                return Err(err(*n, format!("classes do not partition 0..{size}")));
            }
        }
    }
    let only: Vec<Vec<usize>> = blocks.into_iter().map(|(_, b)| b).collect();
    Ok(Partition::from_blocks(size, &only))
}

/// Returns the act name and the partition; compatibility is checked by the
/// caller against the act.
pub fn parse_congruence(text: &str) -> Result<(String, Partition)> {
    let mut lines = Lines::new(text);
    let (n, v) = lines.keyed("congruence")?;
    let name = name_of(&v, "congruence", n)?;
    Ok((name, parse_classes(&mut lines)?))
}

pub fn write_certificate(act_name: &str, cert: &SeparationCertificate) -> String {
    format!(
        "separates {} from {}\n{}",
        cert.element(),
        join(cert.forbidden()),
        write_congruence(act_name, cert.congruence().partition())
    )
}

/// A parsed certificate: act name, element, forbidden set, partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateText {
    pub act: String,
    pub element: usize,
    pub forbidden: Vec<usize>,
    pub partition: Partition,
}

pub fn parse_certificate(text: &str) -> Result<CertificateText> {
    let mut lines = Lines::new(text);
    let (n, v) = lines.keyed("separates")?;
    if v.len() < 2 || v[1] != "from" {
        return Err(err(n, "expected `separates <a> from <x> ..`"));
    }
    let element = index(v[0], n)?;
    let forbidden = v[2..]
        .iter()
        .map(|x| index(x, n))
        .collect::<Result<Vec<_>>>()?;
    let (n, v) = lines.keyed("congruence")?;
    let act = name_of(&v, "congruence", n)?;
    let partition = parse_classes(&mut lines)?;
    Ok(CertificateText {
        act,
        element,
        forbidden,
        partition,
    })
}

/// Whitespace-separated rows of group element indices.
pub fn parse_matrix(text: &str) -> Result<Vec<Vec<usize>>> {
    Lines::new(text)
        .lines
        .iter()
        .map(|(n, t)| t.iter().map(|x| index(x, *n)).collect())
        .collect()
}

/// Whitespace-separated element indices over any number of lines.
pub fn parse_index_list(text: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for (n, t) in Lines::new(text).lines {
        for x in t {
            out.push(index(x, n)?);
        }
    }
    Ok(out)
}
