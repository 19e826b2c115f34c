//! Dense GF(2) linear algebra on machine-word bitsets.
//!
//! This is the elimination backend behind every map-existence search in the
//! crate: unknowns are bits, equations are rows, and a solve returns one
//! particular solution together with a basis of the homogeneous solution
//! space.

/// A fixed-length bit vector backed by `u64` limbs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BitVec {
    len: usize,
    limbs: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            limbs: vec![0; len.div_ceil(64)],
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.limbs[i >> 6] >> (i & 63)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, v: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i & 63);
        if v {
            self.limbs[i >> 6] |= mask;
        } else {
            self.limbs[i >> 6] &= !mask;
        }
    }

    #[inline]
    pub fn toggle(&mut self, i: usize) {
        self.limbs[i >> 6] ^= 1u64 << (i & 63);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.limbs.iter_mut().zip(&other.limbs) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.iter().all(|&l| l == 0)
    }

    /// Index of the first set bit, if any.
    pub fn leading(&self) -> Option<usize> {
        for (w, &limb) in self.limbs.iter().enumerate() {
            if limb != 0 {
                return Some((w << 6) + limb.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }
}

/// A linear system `A x = b` over GF(2), built row by row.
#[derive(Clone, Debug, Default)]
pub struct LinearSystem {
    num_vars: usize,
    rows: Vec<BitVec>,
    rhs: Vec<bool>,
}

/// One solution plus a basis of the homogeneous solution space.
#[derive(Clone, Debug)]
pub struct Solution {
    pub particular: BitVec,
    pub nullspace: Vec<BitVec>,
}

impl LinearSystem {
    pub fn new(num_vars: usize) -> Self {
        LinearSystem {
            num_vars,
            rows: Vec::new(),
            rhs: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Adds the equation `sum_{i in vars} x_i = rhs`. Repeated indices cancel.
    pub fn add_equation(&mut self, vars: impl IntoIterator<Item = usize>, rhs: bool) {
        let mut row = BitVec::zeros(self.num_vars);
        for v in vars {
            row.toggle(v);
        }
        self.rows.push(row);
        self.rhs.push(rhs);
    }

    /// Gaussian elimination. Returns `None` when the system is inconsistent.
    pub fn solve(&self) -> Option<Solution> {
        let n = self.num_vars;
        let mut rows: Vec<(BitVec, bool)> =
            self.rows.iter().cloned().zip(self.rhs.iter().copied()).collect();

        // forward elimination w.r.t. ascending column order
        let mut pivot_of_col: Vec<Option<usize>> = vec![None; n];
        let mut echelon: Vec<(usize, BitVec, bool)> = Vec::new();
        for (mut row, mut b) in rows.drain(..) {
            loop {
                match row.leading() {
                    None => {
                        if b {
                            return None;
                        }
                        break;
                    }
                    Some(col) => match pivot_of_col[col] {
                        Some(idx) => {
                            let (_, prow, pb) = &echelon[idx];
                            let prow = prow.clone();
                            let pb = *pb;
                            row.xor_assign(&prow);
                            b ^= pb;
                        }
                        None => {
                            pivot_of_col[col] = Some(echelon.len());
                            echelon.push((col, row, b));
                            break;
                        }
                    },
                }
            }
        }

        // back substitution: full reduction so that each pivot column occurs
        // in its own row only
        echelon.sort_by_key(|(col, _, _)| *col);
        for i in (0..echelon.len()).rev() {
            let (_, row_i, b_i) = echelon[i].clone();
            for j in 0..i {
                let col_i = echelon[i].0;
                if echelon[j].1.get(col_i) {
                    echelon[j].1.xor_assign(&row_i);
                    echelon[j].2 ^= b_i;
                }
            }
        }

        let pivot_cols: Vec<usize> = echelon.iter().map(|(c, _, _)| *c).collect();
        let is_pivot = {
            let mut v = vec![false; n];
            for &c in &pivot_cols {
                v[c] = true;
            }
            v
        };

        // particular solution: free variables set to zero
        let mut particular = BitVec::zeros(n);
        for (col, _, b) in &echelon {
            particular.set(*col, *b);
        }

        // nullspace basis: one vector per free column
        let mut nullspace = Vec::new();
        for free in 0..n {
            if is_pivot[free] {
                continue;
            }
            let mut v = BitVec::zeros(n);
            v.set(free, true);
            for (col, row, _) in &echelon {
                if row.get(free) {
                    v.set(*col, true);
                }
            }
            nullspace.push(v);
        }

        Some(Solution {
            particular,
            nullspace,
        })
    }
}

impl Solution {
    /// The lexicographically least bit pattern in the affine solution space,
    /// reading variable 0 as the most significant position.
    pub fn lex_min(&self) -> BitVec {
        // echelonize the nullspace by leading bit
        let mut basis: Vec<BitVec> = Vec::new();
        for v in &self.nullspace {
            let mut v = v.clone();
            loop {
                match v.leading() {
                    None => break,
                    Some(lead) => match basis.iter().find(|b| b.leading() == Some(lead)) {
                        Some(b) => {
                            let b = b.clone();
                            v.xor_assign(&b);
                        }
                        None => {
                            basis.push(v);
                            break;
                        }
                    },
                }
            }
        }
        basis.sort_by_key(|b| b.leading());
        let mut sol = self.particular.clone();
        for b in &basis {
            let lead = b.leading().expect("nonzero basis vector");
            if sol.get(lead) {
                sol.xor_assign(b);
            }
        }
        sol
    }
}

/// GF(2) rank of a set of rows.
pub fn rank(rows: &[BitVec]) -> usize {
    let mut basis: Vec<BitVec> = Vec::new();
    for v in rows {
        let mut v = v.clone();
        loop {
            match v.leading() {
                None => break,
                Some(lead) => match basis.iter().find(|b| b.leading() == Some(lead)) {
                    Some(b) => {
                        let b = b.clone();
                        v.xor_assign(&b);
                    }
                    None => {
                        basis.push(v);
                        break;
                    }
                },
            }
        }
    }
    basis.len()
}
