//! The alist sparse-matrix text format.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::matrix::BinaryMatrix;

fn line(out: &mut String, items: impl IntoIterator<Item = usize>) {
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    writeln!(out, "{}", parts.join(" ")).expect("writing to a string");
}

/// `N M`, max degrees, degree lists, then 1-indexed neighbour lists padded
/// with zeros to the maximum degree.
pub fn to_alist(h: &BinaryMatrix) -> String {
    let (m, n) = (h.rows(), h.cols());
    let max_col = (0..n).map(|c| h.col(c).len()).max().unwrap_or(0);
    let max_row = (0..m).map(|r| h.row(r).len()).max().unwrap_or(0);
    let mut out = String::new();
    line(&mut out, [n, m]);
    line(&mut out, [max_col, max_row]);
    line(&mut out, (0..n).map(|c| h.col(c).len()));
    line(&mut out, (0..m).map(|r| h.row(r).len()));
    for c in 0..n {
        let nb = h.col(c);
        line(&mut out, nb.iter().map(|&r| r + 1).chain(std::iter::repeat_n(0, max_col - nb.len())));
    }
    for r in 0..m {
        let nb = h.row(r);
        line(&mut out, nb.iter().map(|&c| c + 1).chain(std::iter::repeat_n(0, max_row - nb.len())));
    }
    out
}

pub fn parse_alist(text: &str) -> Result<BinaryMatrix> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let mut nums = |what: &str| -> Result<Vec<usize>> {
        let l = lines.next().ok_or_else(|| Error::Alist(format!("missing {what}")))?;
        l.split_whitespace().map(|t| t.parse::<usize>().map_err(|e| Error::Alist(format!("{what}: {e}")))).collect()
    };
    let head = nums("header")?;
    let [n, m] = head[..] else {
        return Err(Error::Alist("header must hold N and M".into()));
    };
    nums("maximum degrees")?;
    let col_deg = nums("column degrees")?;
    let row_deg = nums("row degrees")?;
    if col_deg.len() != n || row_deg.len() != m {
        return Err(Error::Alist("degree list lengths disagree with the header".into()));
    }
    let mut entries = Vec::new();
    for (c, &d) in col_deg.iter().enumerate() {
        let nb = nums("column list")?;
        let rows: Vec<usize> = nb.into_iter().filter(|&x| x != 0).collect();
        if rows.len() != d || rows.iter().any(|&r| r > m) {
            return Err(Error::Alist(format!("column {} list is inconsistent", c + 1)));
        }
        entries.extend(rows.into_iter().map(|r| (r - 1, c)));
    }
    let h = BinaryMatrix::from_entries(m, n, entries);
    for (r, &d) in row_deg.iter().enumerate() {
        let nb: Vec<usize> = nums("row list")?.into_iter().filter(|&x| x != 0).map(|x| x - 1).collect();
        if nb.len() != d || nb != h.row(r) {
            return Err(Error::Alist(format!("row {} list disagrees with the columns", r + 1)));
        }
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let h = BinaryMatrix::from_dense(&[vec![1, 1], vec![1, 1]]);
        let s = to_alist(&h);
        assert_eq!(s, "2 2\n2 2\n2 2\n2 2\n1 2\n1 2\n1 2\n1 2\n");
        assert_eq!(parse_alist(&s).unwrap(), h);
    }

    #[test]
    fn padding_round_trip() {
        let h = BinaryMatrix::from_dense(&[vec![1, 0, 1], vec![1, 1, 0]]);
        let s = to_alist(&h);
        assert!(s.lines().nth(4).unwrap() == "1 2");
        assert!(s.lines().nth(5).unwrap() == "2 0");
        assert_eq!(parse_alist(&s).unwrap(), h);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_alist("3\n").is_err());
        assert!(parse_alist("1 1\n1 1\n1\n1\n2\n1\n").is_err());
    }
}
