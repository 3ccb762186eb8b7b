//! Integer lattices in `Z^n`, kept in row echelon form for exact membership.

/// Subgroup of `Z^dim` spanned by a finite set of vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerLattice {
    dim: usize,
    /// Echelon basis: strictly increasing pivot columns, positive pivots.
    rows: Vec<(usize, Vec<i128>)>,
}

impl IntegerLattice {
    pub fn new(dim: usize, generators: Vec<Vec<i64>>) -> Self {
        let mut pending: Vec<Vec<i128>> = generators
            .into_iter()
            .map(|g| {
                assert_eq!(g.len(), dim, "generator length differs from dimension");
                g.into_iter().map(i128::from).collect()
            })
            .filter(|g: &Vec<i128>| g.iter().any(|&x| x != 0))
            .collect();
        let mut rows = Vec::new();
        for col in 0..dim {
            // Euclid on column `col` until at most one vector is nonzero there.
            loop {
                let mut live: Vec<usize> = (0..pending.len())
                    .filter(|&i| pending[i][col] != 0)
                    .collect();
                if live.len() <= 1 {
                    break;
                }
                live.sort_by_key(|&i| pending[i][col].abs());
                let pivot = pending[live[0]].clone();
                for &i in &live[1..] {
                    let q = pending[i][col] / pivot[col];
                    for (x, p) in pending[i].iter_mut().zip(&pivot) {
                        *x -= q * p;
                    }
                }
            }
            if let Some(i) = pending.iter().position(|g| g[col] != 0) {
                let mut row = pending.swap_remove(i);
                if row[col] < 0 {
                    row.iter_mut().for_each(|x| *x = -*x);
                }
                rows.push((col, row));
            }
            pending.retain(|g| g.iter().any(|&x| x != 0));
        }
        IntegerLattice { dim, rows }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        if v.len() != self.dim {
            return false;
        }
        let mut v: Vec<i128> = v.iter().map(|&x| i128::from(x)).collect();
        for (col, row) in &self.rows {
            if v[*col] % row[*col] != 0 {
                return false;
            }
            let q = v[*col] / row[*col];
            for (x, r) in v.iter_mut().zip(row) {
                *x -= q * r;
            }
        }
        v.iter().all(|&x| x == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_of_one_dimensional_generators() {
        let l = IntegerLattice::new(1, vec![vec![6], vec![10]]);
        assert!(l.contains(&[2]));
        assert!(l.contains(&[-4]));
        assert!(!l.contains(&[3]));
    }

    #[test]
    fn empty_lattice_is_zero() {
        let l = IntegerLattice::new(2, vec![vec![0, 0]]);
        assert_eq!(l.rank(), 0);
        assert!(l.contains(&[0, 0]));
        assert!(!l.contains(&[1, 0]));
    }

    #[test]
    fn fundamental_domain_count() {
        let l = IntegerLattice::new(3, vec![vec![2, 1, 0], vec![0, 3, 1], vec![1, 0, 1]]);
        // |det| = 7, so 7Z^3 lies in the lattice and the box [0,7)^3 holds 343 / 7 points.
        let mut count = 0;
        for x in 0..7 {
            for y in 0..7 {
                for z in 0..7 {
                    count += l.contains(&[x, y, z]) as usize;
                }
            }
        }
        assert_eq!(count, 49);
    }

    #[test]
    fn agrees_with_small_combinations() {
        let gens = vec![vec![2, -1], vec![4, 1]];
        let l = IntegerLattice::new(2, gens.clone());
        let mut members = std::collections::HashSet::new();
        for a in -12..=12i64 {
            for b in -12..=12i64 {
                members.insert((
                    a * gens[0][0] + b * gens[1][0],
                    a * gens[0][1] + b * gens[1][1],
                ));
            }
        }
        for x in -6..=6 {
            for y in -6..=6 {
                assert_eq!(l.contains(&[x, y]), members.contains(&(x, y)), "({x}, {y})");
            }
        }
    }
}
