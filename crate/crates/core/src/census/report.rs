//! TSV tables and grouping by Martin data.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_rational::BigRational;

use super::batch::{InvariantRecord, TaskSet};

fn columns(tasks: &TaskSet) -> Vec<String> {
    let mut cols: Vec<String> = ["name", "n", "degree"].iter().map(|s| s.to_string()).collect();
    match tasks.sequence {
        Some(r) => {
            cols.push("M".into());
            cols.extend((2..=r).map(|i| format!("M{i}")));
        }
        None if tasks.martin => cols.push("M".into()),
        None => {}
    }
    if tasks.polynomial {
        cols.push("polynomial".into());
    }
    if tasks.permanent {
        cols.push("perm".into());
    }
    cols.extend(tasks.c2.iter().map(|p| format!("c2_{p}")));
    cols.push("errors".into());
    cols
}

/// One header line and one line per record, tab separated. Missing values
/// are `-`.
pub fn render_table(records: &[InvariantRecord], tasks: &TaskSet) -> String {
    let mut out = columns(tasks).join("\t");
    out.push('\n');
    let dash = || "-".to_string();
    for r in records {
        let mut row = vec![
            r.name.clone(),
            r.vertices.to_string(),
            r.degree.map_or_else(dash, |d| d.to_string()),
        ];
        match tasks.sequence {
            Some(rmax) => {
                for i in 0..rmax as usize {
                    row.push(r.sequence.get(i).cloned().unwrap_or_else(dash));
                }
            }
            None if tasks.martin => row.push(r.martin.clone().unwrap_or_else(dash)),
            None => {}
        }
        if tasks.polynomial {
            row.push(r.polynomial.clone().unwrap_or_else(dash));
        }
        if tasks.permanent {
            row.push(r.permanent.clone().unwrap_or_else(dash));
        }
        for p in &tasks.c2 {
            let v = r.c2.iter().find(|(q, _)| q == p).map(|(_, v)| v.clone());
            row.push(v.unwrap_or_else(dash));
        }
        row.push(if r.errors.is_empty() { dash() } else { r.errors.join("; ") });
        out.push_str(&row.join("\t"));
        out.push('\n');
    }
    out
}

/// Records with equal Martin data (the first `depth` entries of the
/// sequence, or the invariant alone), ordered by value then by name.
/// Records without that much data are left out.
pub fn group_by_invariant(records: &[InvariantRecord], depth: usize) -> Vec<(Vec<String>, Vec<String>)> {
    let mut classes: BTreeMap<Vec<BigRational>, (Vec<String>, Vec<String>)> = BTreeMap::new();
    for r in records {
        let data = r.martin_data();
        if depth == 0 || data.len() < depth {
            continue;
        }
        let key: Option<Vec<BigRational>> = data[..depth].iter().map(|s| BigRational::from_str(s).ok()).collect();
        let Some(key) = key else { continue };
        let entry = classes.entry(key).or_insert_with(|| (data[..depth].to_vec(), Vec::new()));
        entry.1.push(r.name.clone());
    }
    classes
        .into_values()
        .map(|(k, mut names)| {
            names.sort();
            (k, names)
        })
        .collect()
}

/// `size TAB values TAB names` per class; values and names comma separated.
pub fn render_groups(groups: &[(Vec<String>, Vec<String>)]) -> String {
    let mut out = String::from("size\tmartin\tgraphs\n");
    for (k, names) in groups {
        out.push_str(&format!("{}\t{}\t{}\n", names.len(), k.join(","), names.join(",")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(name: &str, seq: &[&str]) -> InvariantRecord {
        InvariantRecord {
            name: name.into(),
            vertices: 5,
            degree: Some(4),
            sequence: seq.iter().map(|s| s.to_string()).collect(),
            ..Default::default()
        }
    }

    #[test]
    fn groups_are_sorted_numerically() {
        let rs = [rec("b", &["14", "84096"]), rec("a", &["6", "2016"]), rec("c", &["14", "84096"]), rec("d", &["100"])];
        let g = group_by_invariant(&rs, 2);
        assert_eq!(g.len(), 2);
        assert_eq!(g[0].1, vec!["a"]);
        assert_eq!(g[1].1, vec!["b", "c"]);
        assert_eq!(group_by_invariant(&rs, 1).last().unwrap().1, vec!["d"]);
    }

    #[test]
    fn table_layout() {
        let t = TaskSet::parse("sequence,c2", 2, &[2]).unwrap();
        let mut r = rec("K5", &["6", "2016"]);
        r.c2 = vec![(2, "1".into())];
        let s = render_table(&[r], &t);
        assert_eq!(s, "name\tn\tdegree\tM\tM2\tc2_2\terrors\nK5\t5\t4\t6\t2016\t1\t-\n");
    }
}
