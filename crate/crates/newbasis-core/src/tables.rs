//! Paper-format tables for the `S_D` families: parsing of the committed
//! fixture files, verification of every row against computed data, and
//! rendering.
//!
//! The committed fixtures fix the row order and the entry order inside each
//! row (both are presentation choices, not derivable data); everything
//! mathematical in a row — the member set of `⟨B⟩` (or its quotient image),
//! the boxed vector, and the "boxed earlier" property — is recomputed and
//! checked before a fixture line is emitted.

use std::collections::BTreeSet;

use crate::f2::{eps_vector, span, F2Vector, SdOrder};
use crate::intervals::{enumerate_s, IntervalSet};
use crate::odd::{alpha, e_bijection_odd, enumerate_s_odd};

pub fn fixture_text(d: u32) -> Option<&'static str> {
    match d {
        2 => Some(include_str!("../fixtures/sd_table_2.txt")),
        3 => Some(include_str!("../fixtures/sd_odd_table_3.txt")),
        4 => Some(include_str!("../fixtures/sd_table_4.txt")),
        5 => Some(include_str!("../fixtures/sd_odd_table_5.txt")),
        6 => Some(include_str!("../fixtures/sd_table_6.txt")),
        7 => Some(include_str!("../fixtures/sd_odd_table_7.txt")),
        _ => None,
    }
}

/// One parsed table row: the set (with its display member order), the
/// entries in display order, and the index of the boxed entry.
#[derive(Debug, Clone)]
pub struct TableRow {
    pub key: String,
    pub set: IntervalSet,
    pub entries: Vec<String>,
    pub boxed: usize,
}

pub fn parse_table(d: u32, text: &str) -> Result<Vec<TableRow>, String> {
    let mut rows = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line
            .split_once(":(")
            .ok_or_else(|| format!("line {}: missing ':('", n + 1))?;
        let body = rest
            .strip_suffix(')')
            .ok_or_else(|| format!("line {}: missing ')'", n + 1))?;
        let set = IntervalSet::parse(d, key).ok_or_else(|| format!("line {}: bad key", n + 1))?;
        let mut entries = Vec::new();
        let mut boxed = None;
        for item in body.split(',') {
            if let Some(inner) = item.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
                if boxed.replace(entries.len()).is_some() {
                    return Err(format!("line {}: two boxed entries", n + 1));
                }
                entries.push(inner.to_string());
            } else {
                entries.push(item.to_string());
            }
        }
        let boxed = boxed.ok_or_else(|| format!("line {}: no boxed entry", n + 1))?;
        rows.push(TableRow { key: key.to_string(), set, entries, boxed });
    }
    Ok(rows)
}

fn check_box_precedence(rows: &[TableRow]) -> Result<(), String> {
    let mut boxed_so_far: BTreeSet<&str> = BTreeSet::new();
    for row in rows {
        for (i, e) in row.entries.iter().enumerate() {
            if i != row.boxed && !boxed_so_far.contains(e.as_str()) {
                return Err(format!(
                    "row {}: entry {} was not boxed in any earlier row",
                    row.key, e
                ));
            }
        }
        boxed_so_far.insert(&row.entries[row.boxed]);
    }
    Ok(())
}

/// Verify a parsed even-`D` table against the enumeration, spans and ε.
pub fn verify_even_rows(d: u32, rows: &[TableRow]) -> Result<(), String> {
    let family: BTreeSet<IntervalSet> = enumerate_s(d).into_iter().collect();
    if rows.len() != family.len() {
        return Err(format!("{} rows, expected {}", rows.len(), family.len()));
    }
    let listed: BTreeSet<IntervalSet> = rows.iter().map(|r| r.set.clone()).collect();
    if listed != family {
        return Err("table rows do not list S_D exactly".into());
    }
    for row in rows {
        let members: BTreeSet<String> =
            span(&row.set).elements().iter().map(F2Vector::digits).collect();
        let fixture: BTreeSet<String> = row.entries.iter().cloned().collect();
        if members != fixture {
            return Err(format!(
                "row {}: span mismatch: computed {:?}, fixture {:?}",
                row.key, members, fixture
            ));
        }
        let eps = eps_vector(&row.set).digits();
        if row.entries[row.boxed] != eps {
            return Err(format!(
                "row {}: boxed entry {} but ε(B) = {}",
                row.key, row.entries[row.boxed], eps
            ));
        }
    }
    check_box_precedence(rows)
}

/// Verify a parsed odd-`D` table: entries are coset representatives of
/// `π(⟨B⟩)` and the boxed one is `e^{-1}` of the row's subspace.
pub fn verify_odd_rows(d: u32, rows: &[TableRow]) -> Result<(), String> {
    let family: BTreeSet<IntervalSet> = enumerate_s_odd(d).into_iter().collect();
    if rows.len() != family.len() {
        return Err(format!("{} rows, expected {}", rows.len(), family.len()));
    }
    let listed: BTreeSet<IntervalSet> = rows.iter().map(|r| r.set.clone()).collect();
    if listed != family {
        return Err("table rows do not list S_D exactly".into());
    }
    let e = e_bijection_odd(d)?;
    for row in rows {
        let sub = alpha(&row.set);
        let members: BTreeSet<String> = sub.reps.iter().map(F2Vector::digits).collect();
        let fixture: BTreeSet<String> = row.entries.iter().cloned().collect();
        if members != fixture {
            return Err(format!(
                "row {}: quotient span mismatch: computed {:?}, fixture {:?}",
                row.key, members, fixture
            ));
        }
        let boxed_vec = F2Vector::parse(d, &row.entries[row.boxed])
            .ok_or_else(|| format!("row {}: unparsable boxed entry", row.key))?;
        match e.get(&boxed_vec) {
            Some(b) if *b == row.set => {}
            _ => {
                return Err(format!(
                    "row {}: boxed {} is not e^{{-1}}(π⟨B⟩)",
                    row.key, row.entries[row.boxed]
                ))
            }
        }
    }
    check_box_precedence(rows)
}

/// Render the table for `d`. For the fixture sizes the committed table is
/// verified and returned verbatim; other sizes get a canonical layout
/// (rows in a linear extension of the order, entries sorted, box last).
pub fn render_sd_table(d: u32) -> Result<String, String> {
    assert_eq!(d % 2, 0);
    if let Some(text) = fixture_text(d) {
        let rows = parse_table(d, text)?;
        verify_even_rows(d, &rows)?;
        return Ok(text.to_string());
    }
    let ord = SdOrder::new(d);
    let order = crate::basis::linear_extension(&ord);
    let mut out = String::new();
    for x in order {
        let b = ord.eps_inverse(&x);
        let eps = eps_vector(b).digits();
        let mut entries: Vec<String> = span(b)
            .elements()
            .iter()
            .map(F2Vector::digits)
            .filter(|e| *e != eps)
            .collect();
        entries.push(format!("[{}]", eps));
        let key: Vec<String> = b.items().iter().map(|iv| iv.digits()).collect();
        out.push_str(&format!("<{}>:({})\n", key.join(","), entries.join(",")));
    }
    Ok(out)
}

pub fn render_sd_odd_table(d: u32) -> Result<String, String> {
    assert_eq!(d % 2, 1);
    if let Some(text) = fixture_text(d) {
        let rows = parse_table(d, text)?;
        verify_odd_rows(d, &rows)?;
        return Ok(text.to_string());
    }
    let e = e_bijection_odd(d)?;
    let inv: std::collections::BTreeMap<IntervalSet, F2Vector> =
        e.iter().map(|(x, b)| (b.clone(), *x)).collect();
    let mut out = String::new();
    for b in enumerate_s_odd(d) {
        let boxed = inv[&b].digits();
        let mut entries: Vec<String> = alpha(&b)
            .reps
            .iter()
            .map(F2Vector::digits)
            .filter(|r| *r != boxed)
            .collect();
        entries.push(format!("[{}]", boxed));
        let key: Vec<String> = b.items().iter().map(|iv| iv.digits()).collect();
        out.push_str(&format!("<{}>:({})\n", key.join(","), entries.join(",")));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_tables_verify_and_render() {
        for d in [2u32, 4, 6] {
            let text = render_sd_table(d).unwrap();
            assert_eq!(text, fixture_text(d).unwrap(), "D={}", d);
        }
        for d in [3u32, 5, 7] {
            let text = render_sd_odd_table(d).unwrap();
            assert_eq!(text, fixture_text(d).unwrap(), "D={}", d);
        }
    }

    #[test]
    fn canonical_render_is_selfconsistent() {
        // a size without a fixture renders and its rows re-verify
        let text = render_sd_table(0).unwrap();
        assert_eq!(text, "<>:([0])\n");
        let rows = parse_table(8, &render_sd_table(8).unwrap()).unwrap();
        verify_even_rows(8, &rows).unwrap();
        let rows = parse_table(1, &render_sd_odd_table(1).unwrap()).unwrap();
        verify_odd_rows(1, &rows).unwrap();
    }
}
