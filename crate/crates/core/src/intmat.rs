//! Internal dense matrices over arbitrary-precision integers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct IntMatrix {
    n: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> IntMatrix {
        IntMatrix {
            n,
            data: vec![BigInt::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(n);
        for i in 0..n {
            *m.get_mut(i, i) = BigInt::one();
        }
        m
    }

    pub fn adjacency(g: &Graph) -> IntMatrix {
        let mut m = IntMatrix::zeros(g.order());
        for (u, v) in g.edges() {
            *m.get_mut(u, v) = BigInt::one();
            *m.get_mut(v, u) = BigInt::one();
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.n + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.data[i * self.n + j]
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        *out.get_mut(i, j) += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn add_scalar_to_diagonal(&mut self, c: &BigInt) {
        for i in 0..self.n {
            *self.get_mut(i, i) += c;
        }
    }
}
