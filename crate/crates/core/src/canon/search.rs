//! Orbit search for the least Hermite form.
//!
//! The orbit of an `n x m` matrix `M` is `{ U * M * S * P }` for `U` in
//! `GL_n(Z)`, `S` a diagonal sign matrix and `P` a permutation. Matrices are
//! compared column by column, each column top to bottom. The search places
//! columns one at a time; the Hermite form of a column prefix does not depend
//! on the columns that follow, so a prefix already larger than the incumbent
//! is cut.
//!
//! Signs are resolved lazily. Choosing `-v` instead of `v` for a column that
//! creates a unit pivot only negates that pivot row in the remaining columns,
//! so such rows are kept in "free" groups whose common sign is fixed the
//! first time a later column forces it. Flipping a free group multiplies the
//! tracked sign by `chi(-1)^(group size)`, which is how the search notices
//! orbit self-annihilation without enumerating both signs.

use std::cmp::Ordering;

use crate::linalg::{pivot_step, Step, Zint};

pub(crate) enum Outcome<T> {
    SelfAnnihilating,
    Found { columns: Vec<Vec<T>>, sign: i8 },
}

#[derive(Clone)]
struct Node<T> {
    t: Vec<Vec<T>>,
    rank: usize,
    used: u64,
    // 0 marks a row with fixed sign; other values name a free group.
    label: Vec<u32>,
    next_label: u32,
    inv_odd: bool,
    det_odd: bool,
}

struct Choice<T> {
    col: usize,
    column: Vec<T>,
    // Column sign forced by a fixed row; 0 when still free.
    s: i8,
    // Forced value of (column sign * group sign) per touched group.
    groups: Vec<(u32, i8)>,
    pivot: bool,
}

struct Search<T> {
    n: usize,
    m: usize,
    chi_odd: bool,
    best: Vec<Vec<T>>,
    best_sign: i8,
    zero: bool,
}

/// Runs the search on the columns of an `n x m` matrix of full rank `n`
/// with no two columns equal up to sign. `None` signals overflow in `T`.
pub(crate) fn least_form<T: Zint>(columns: &[Vec<T>], n: usize, chi_odd: bool) -> Option<Outcome<T>> {
    let m = columns.len();
    assert!(m <= 64, "column bitmask holds at most 64 columns");
    let t: Vec<Vec<T>> = (0..n).map(|i| columns.iter().map(|c| c[i].clone()).collect()).collect();
    let root = Node { t, rank: 0, used: 0, label: vec![0; n], next_label: 1, inv_odd: false, det_odd: false };
    let mut s = Search { n, m, chi_odd, best: Vec::with_capacity(m), best_sign: 0, zero: false };
    s.dfs(&root, 0)?;
    if s.zero {
        return Some(Outcome::SelfAnnihilating);
    }
    debug_assert_eq!(s.best.len(), m);
    Some(Outcome::Found { columns: s.best, sign: s.best_sign })
}

fn get_known(groups: &[(u32, i8)], s: i8, label: u32) -> i8 {
    if label == 0 {
        s
    } else {
        groups.iter().find(|(l, _)| *l == label).map_or(0, |(_, v)| *v)
    }
}

fn set_known(groups: &mut Vec<(u32, i8)>, s: &mut i8, label: u32, v: i8) {
    if label == 0 {
        *s = v;
    } else {
        groups.push((label, v));
    }
}

// Floor remainder in [0, g) for g > 0.
fn floor_mod<T: Zint>(x: &T, g: &T) -> Option<T> {
    x.zsub(&x.zdiv_floor(g)?.zmul(g)?)
}

impl<T: Zint> Search<T> {
    fn dfs(&mut self, node: &Node<T>, depth: usize) -> Option<()> {
        if self.zero {
            return Some(());
        }
        if depth == self.m {
            self.leaf(node);
            return Some(());
        }
        let mut choices: Vec<Choice<T>> = Vec::new();
        for c in 0..self.m {
            if node.used & (1 << c) != 0 {
                continue;
            }
            for ch in self.evaluate(node, c)? {
                match choices.first().map(|b| ch.column.cmp(&b.column)) {
                    None | Some(Ordering::Equal) => choices.push(ch),
                    Some(Ordering::Less) => {
                        choices.clear();
                        choices.push(ch);
                    }
                    Some(Ordering::Greater) => {}
                }
            }
        }
        let column = &choices[0].column;
        match self.best.get(depth).map(|b| column.cmp(b)) {
            Some(Ordering::Greater) => return Some(()),
            Some(Ordering::Equal) => {}
            Some(Ordering::Less) | None => {
                self.best.truncate(depth);
                self.best.push(column.clone());
                self.best_sign = 0;
            }
        }
        for ch in &choices {
            let child = self.apply(node, ch)?;
            self.dfs(&child, depth + 1)?;
            if self.zero {
                break;
            }
        }
        Some(())
    }

    fn leaf(&mut self, node: &Node<T>) {
        if self.chi_odd {
            let mut sizes: Vec<(u32, usize)> = Vec::new();
            for &l in node.label.iter().filter(|&&l| l != 0) {
                match sizes.iter_mut().find(|(x, _)| *x == l) {
                    Some((_, k)) => *k += 1,
                    None => sizes.push((l, 1)),
                }
            }
            if sizes.iter().any(|(_, k)| k % 2 == 1) {
                self.zero = true;
                return;
            }
        }
        let odd = node.inv_odd ^ (self.chi_odd && node.det_odd);
        let sign = if odd { -1 } else { 1 };
        if self.best_sign == 0 {
            self.best_sign = sign;
        } else if self.best_sign != sign {
            self.zero = true;
        }
    }

    // Least achievable next column when column `c` is placed next, with
    // every way of achieving it.
    fn evaluate(&self, node: &Node<T>, c: usize) -> Option<Vec<Choice<T>>> {
        let n = self.n;
        let rank = node.rank;
        let y: Vec<&T> = node.t.iter().map(|row| &row[c]).collect();
        let mut g = T::zzero();
        for v in &y[rank..] {
            if !v.zis_zero() {
                g = g.zgcd(v);
            }
        }
        let pivot = !g.zis_zero();
        if !pivot {
            let mut s = 0i8;
            let mut groups = Vec::new();
            let mut column = Vec::with_capacity(n);
            for i in 0..rank {
                let v = y[i];
                if v.zis_zero() {
                    column.push(T::zzero());
                    continue;
                }
                let l = node.label[i];
                let mut known = get_known(&groups, s, l);
                if known == 0 {
                    known = if v.zis_negative() { 1 } else { -1 };
                    set_known(&mut groups, &mut s, l, known);
                }
                column.push(if known > 0 { v.clone() } else { v.zneg()? });
            }
            column.resize(n, T::zzero());
            return Some(vec![Choice { col: c, column, s, groups, pivot: false }]);
        }
        let one = T::from_i64(1);
        if g == one {
            let mut column = vec![T::zzero(); n];
            column[rank] = one;
            return Some(vec![Choice { col: c, column, s: 0, groups: Vec::new(), pivot: true }]);
        }
        // Pivot g > 1: entries above are residues mod g whose values depend on
        // the signs. Ties (2r = g) branch.
        let mut partial: Vec<(i8, Vec<(u32, i8)>, Vec<T>)> = vec![(0, Vec::new(), Vec::with_capacity(n))];
        for i in 0..rank {
            let l = node.label[i];
            let r_pos = floor_mod(y[i], &g)?;
            let r_neg = floor_mod(&y[i].zneg()?, &g)?;
            let mut next = Vec::with_capacity(partial.len());
            for (s, groups, col) in partial {
                let known = get_known(&groups, s, l);
                let options: Vec<(i8, T)> = if known != 0 {
                    vec![(0, if known > 0 { r_pos.clone() } else { r_neg.clone() })]
                } else if r_pos.zis_zero() {
                    vec![(0, r_pos.clone())]
                } else {
                    match r_pos.cmp(&r_neg) {
                        Ordering::Less => vec![(1, r_pos.clone())],
                        Ordering::Greater => vec![(-1, r_neg.clone())],
                        Ordering::Equal => vec![(1, r_pos.clone()), (-1, r_neg.clone())],
                    }
                };
                for (set, val) in options {
                    let (mut s2, mut g2, mut c2) = (s, groups.clone(), col.clone());
                    if set != 0 {
                        set_known(&mut g2, &mut s2, l, set);
                    }
                    c2.push(val);
                    next.push((s2, g2, c2));
                }
            }
            let least = next.iter().map(|p| p.2[i].clone()).min().expect("non-empty");
            next.retain(|p| p.2[i] == least);
            partial = next;
        }
        let mut out = Vec::with_capacity(partial.len());
        for (s, groups, mut column) in partial {
            column.push(g.clone());
            column.resize(n, T::zzero());
            out.push(Choice { col: c, column, s, groups, pivot: true });
        }
        Some(out)
    }

    fn apply(&self, node: &Node<T>, ch: &Choice<T>) -> Option<Node<T>> {
        let mut child = node.clone();
        let rank = node.rank;
        let negate_rows = |child: &mut Node<T>, label: u32| -> Option<()> {
            for i in 0..rank {
                if child.label[i] == label {
                    for x in child.t[i].iter_mut() {
                        if !x.zis_zero() {
                            *x = x.zneg()?;
                        }
                    }
                    child.det_odd = !child.det_odd;
                }
            }
            Some(())
        };
        let col_sign;
        let new_label;
        if ch.s != 0 {
            col_sign = ch.s;
            for &(l, t) in &ch.groups {
                if t * ch.s < 0 {
                    negate_rows(&mut child, l)?;
                }
                for i in 0..rank {
                    if child.label[i] == l {
                        child.label[i] = 0;
                    }
                }
            }
            new_label = 0;
        } else {
            col_sign = 1;
            new_label = child.next_label;
            child.next_label += 1;
            for &(l, t) in &ch.groups {
                if t < 0 {
                    negate_rows(&mut child, l)?;
                }
                for i in 0..rank {
                    if child.label[i] == l {
                        child.label[i] = new_label;
                    }
                }
            }
        }
        if col_sign < 0 {
            for row in child.t.iter_mut() {
                if !row[ch.col].zis_zero() {
                    row[ch.col] = row[ch.col].zneg()?;
                }
            }
        }
        if ch.pivot {
            match pivot_step(&mut child.t, rank, ch.col)? {
                Step::Pivot { flips } => {
                    if flips % 2 == 1 {
                        child.det_odd = !child.det_odd;
                    }
                }
                Step::NoPivot => unreachable!("pivot predicted"),
            }
            child.label[rank] = new_label;
            child.rank += 1;
        }
        debug_assert!(
            child.t.iter().zip(&ch.column).all(|(row, v)| row[ch.col] == *v),
            "placed column differs from prediction"
        );
        let later = (node.used >> (ch.col + 1)).count_ones();
        if later % 2 == 1 {
            child.inv_odd = !child.inv_odd;
        }
        child.used |= 1 << ch.col;
        Some(child)
    }
}
