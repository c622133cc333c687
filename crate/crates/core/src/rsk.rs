//! Colored Robinson–Schensted: `G(r,n)` ↔ pairs of same-shape r-partite
//! standard tableaux.

use serde::{Deserialize, Serialize};

use crate::colored_perm::ColoredPermutation;
use crate::error::{Error, Result};
use crate::shapes::{MultiPartition, MultiTableau, Tableau};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableauPair {
    pub p: MultiTableau,
    pub q: MultiTableau,
}

impl TableauPair {
    pub fn shape(&self) -> MultiPartition {
        self.p.shape()
    }

    pub fn swapped(&self) -> Self {
        Self {
            p: self.q.clone(),
            q: self.p.clone(),
        }
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("tableaux serialize")
    }
}

/// Which color a letter carries into insertion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ColorAttachment {
    /// The color stored at the scanned position `j` (the normative choice).
    #[default]
    Position,
    /// The color stored at position `σ(j)`; breaks transpose duality.
    Value,
}

/// Row insertion of `value`; returns the new tableau and the cell it created.
pub fn rs_insert(tableau: &Tableau, value: u32) -> Result<(Tableau, (usize, usize))> {
    if tableau.entries().any(|e| e == value) {
        return Err(Error::DuplicateValue(value));
    }
    let mut rows = tableau.0.clone();
    let mut x = value;
    for (i, row) in rows.iter_mut().enumerate() {
        match row.iter().position(|&y| y > x) {
            Some(j) => x = std::mem::replace(&mut row[j], x),
            None => {
                row.push(x);
                let col = row.len() - 1;
                return Ok((Tableau(rows), (i, col)));
            }
        }
    }
    let i = rows.len();
    rows.push(vec![x]);
    Ok((Tableau(rows), (i, 0)))
}

/// Reverse bump out of the corner `(row, col)`; returns the ejected letter.
fn rs_uninsert(rows: &mut Vec<Vec<u32>>, row: usize, col: usize) -> u32 {
    let mut y = rows[row].remove(col);
    if rows[row].is_empty() {
        rows.remove(row);
    }
    for i in (0..row).rev() {
        let k = rows[i].iter().rposition(|&x| x < y).expect("standard tableau");
        y = std::mem::replace(&mut rows[i][k], y);
    }
    y
}

pub fn colored_rsk(pi: &ColoredPermutation) -> TableauPair {
    colored_rsk_with(pi, ColorAttachment::Position)
}

/// Scans positions `j = 1..n`, inserting letter `σ(j)` into `P_c` and
/// recording `j` in `Q_c` where `c` is chosen by `attach`.
pub fn colored_rsk_with(pi: &ColoredPermutation, attach: ColorAttachment) -> TableauPair {
    let r = pi.r();
    let mut p = MultiTableau::empty(r);
    let mut q = MultiTableau::empty(r);
    for (j, &image) in pi.perm().iter().enumerate() {
        let c = match attach {
            ColorAttachment::Position => pi.colors()[j],
            ColorAttachment::Value => pi.colors()[image],
        };
        let (next, (row, _)) = rs_insert(&p.0[c], image as u32 + 1).expect("letters are distinct");
        p.0[c] = next;
        let rec = &mut q.0[c].0;
        if row == rec.len() {
            rec.push(Vec::new());
        }
        rec[row].push(j as u32 + 1);
    }
    TableauPair { p, q }
}

/// Inverse of [`colored_rsk`]; rejects anything that is not a same-shape
/// pair of standard r-partite tableaux on `1..=n`.
pub fn inverse_colored_rsk(pair: &TableauPair, r: usize, n: usize) -> Result<ColoredPermutation> {
    if r == 0 {
        return Err(Error::InvalidModulus(r));
    }
    for t in [&pair.p, &pair.q] {
        if t.0.len() != r {
            return Err(Error::InvalidTableau(format!(
                "expected {r} components, got {}",
                t.0.len()
            )));
        }
        let cells: usize = t.0.iter().map(Tableau::num_cells).sum();
        if cells != n {
            return Err(Error::SizeMismatch {
                expected: n,
                got: cells,
            });
        }
        if !t.is_standard() {
            return Err(Error::InvalidTableau("not a standard r-partite tableau".into()));
        }
    }
    if pair.p.shape() != pair.q.shape() {
        return Err(Error::InvalidTableau("P and Q differ in shape".into()));
    }
    let mut p: Vec<Vec<Vec<u32>>> = pair.p.0.iter().map(|t| t.0.clone()).collect();
    let mut q: Vec<Vec<Vec<u32>>> = pair.q.0.iter().map(|t| t.0.clone()).collect();
    let mut perm = vec![0; n];
    let mut colors = vec![0; n];
    for j in (1..=n as u32).rev() {
        let (c, row) = q
            .iter()
            .enumerate()
            .find_map(|(c, rows)| rows.iter().position(|row| row.last() == Some(&j)).map(|i| (c, i)))
            .ok_or_else(|| Error::InvalidTableau(format!("{j} is not at a row end of Q")))?;
        let col = q[c][row].len() - 1;
        q[c][row].pop();
        if q[c][row].is_empty() {
            q[c].remove(row);
        }
        let letter = rs_uninsert(&mut p[c], row, col);
        perm[j as usize - 1] = letter as usize - 1;
        colors[j as usize - 1] = c;
    }
    ColoredPermutation::new(r, perm, colors)
}

/// Common shape of `P = Q` for a symmetric element.
pub fn shape_of_involution(w: &ColoredPermutation) -> Result<MultiPartition> {
    if !w.is_absolute_involution() {
        return Err(Error::NotAbsoluteInvolution);
    }
    Ok(colored_rsk(w).shape())
}
