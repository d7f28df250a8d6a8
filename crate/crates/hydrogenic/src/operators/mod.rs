//! Finite truncations of the ladder-algebra operators in the fixed-l basis
//! |n l>, n = l+1 ..= n_max: N, H_N, the ladders, rho, the radial momentum
//! and the symmetric pair (q, p), plus commutators, expectation values and
//! basis-state uncertainty products.

mod dense;

use num_complex::Complex;

use crate::atom::{ladder_eigenvalue, LadderSign, QuantumNumbers};
use crate::error::{Error, Result};
use crate::numerics::{tridiag_condition_estimate, tridiag_solve};
use crate::scalar::Real;

use dense::CMatrix;

/// Fixed-l truncation window n = l+1 ..= n_max.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruncatedBasis {
    l: u32,
    n_max: u32,
}

impl TruncatedBasis {
    /// Requires at least two basis vectors (n_max >= l + 2).
    pub fn new(l: u32, n_max: u32) -> Result<Self> {
        if n_max < l + 2 {
            return Err(Error::BasisTooSmall { l, n_max });
        }
        Ok(Self { l, n_max })
    }

    /// The stock working size n_max = l + 64: ample headroom for every
    /// desk-scale computation in this crate.
    pub fn default_for_l(l: u32) -> Self {
        Self { l, n_max: l + 64 }
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn n_max(&self) -> u32 {
        self.n_max
    }

    pub fn dim(&self) -> usize {
        (self.n_max - self.l) as usize
    }

    /// Principal number of basis index i.
    pub fn n_at(&self, index: usize) -> u32 {
        self.l + 1 + index as u32
    }

    /// Basis index of principal number n.
    pub fn index_of(&self, n: u32) -> Result<usize> {
        if n < self.l + 1 || n > self.n_max {
            return Err(Error::OutOfTruncation {
                n,
                l: self.l,
                n_max: self.n_max,
            });
        }
        Ok((n - self.l - 1) as usize)
    }

    fn shrunk(&self) -> Self {
        Self {
            l: self.l,
            n_max: self.n_max - 1,
        }
    }
}

/// Which operator a matrix represents.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorKind {
    /// Number operator N = diag(n).
    Number,
    /// H_N = l(l+1) Identity.
    Hn,
    /// A_plus (first subdiagonal).
    APlus,
    /// A_minus (first superdiagonal).
    AMinus,
    /// rho = 2N - (A_minus + A_plus).
    Rho,
    /// P_rho = (i/2) rho^{-1} (A_minus - A_plus), hbar = 1.
    PRho,
    /// rho P_rho = (i/2)(A_minus - A_plus).
    RhoPRho,
    /// q = (A_plus + A_minus) / sqrt 2.
    Q,
    /// p = i (A_plus - A_minus) / sqrt 2.
    P,
    /// Product of algebra on the above.
    Custom,
}

/// A dense finite truncation of an operator on the fixed-l ladder.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorMatrix<R: Real> {
    basis: TruncatedBasis,
    kind: OperatorKind,
    entries: CMatrix<R>,
}

fn raise_eigenvalue<R: Real>(n: u32, l: u32) -> R {
    ladder_eigenvalue(LadderSign::Raise, QuantumNumbers::new(n, l).expect("basis keeps n valid"))
}

/// Builds the requested operator on the given basis.
///
/// `PRho` runs a tridiagonal solve against rho and fails with a condition
/// estimate if the truncated rho were ever numerically singular (it is
/// strictly diagonally dominant on these bases, so this guards corrupted
/// input only).
pub fn build_operator<R: Real>(
    kind: OperatorKind,
    basis: TruncatedBasis,
) -> Result<OperatorMatrix<R>> {
    let dim = basis.dim();
    let l = basis.l();
    let mut entries = CMatrix::<R>::zeros(dim);
    let zero = R::zero();
    match kind {
        OperatorKind::Number => {
            for i in 0..dim {
                entries.set(i, i, Complex::new(R::from_uint(u64::from(basis.n_at(i))), zero));
            }
        }
        OperatorKind::Hn => {
            let v = R::from_uint(u64::from(l) * u64::from(l + 1));
            for i in 0..dim {
                entries.set(i, i, Complex::new(v, zero));
            }
        }
        OperatorKind::APlus => {
            for i in 0..dim - 1 {
                let a = raise_eigenvalue::<R>(basis.n_at(i), l);
                entries.set(i + 1, i, Complex::new(a, zero));
            }
        }
        OperatorKind::AMinus => {
            for i in 0..dim - 1 {
                let a = raise_eigenvalue::<R>(basis.n_at(i), l);
                entries.set(i, i + 1, Complex::new(a, zero));
            }
        }
        OperatorKind::Rho => {
            for i in 0..dim {
                let n = R::from_uint(u64::from(basis.n_at(i)));
                entries.set(i, i, Complex::new(R::of(2.0) * n, zero));
            }
            for i in 0..dim - 1 {
                let a = raise_eigenvalue::<R>(basis.n_at(i), l);
                entries.set(i, i + 1, Complex::new(-a, zero));
                entries.set(i + 1, i, Complex::new(-a, zero));
            }
        }
        OperatorKind::RhoPRho => {
            // (i/2)(A_minus - A_plus)
            for i in 0..dim - 1 {
                let half_a = raise_eigenvalue::<R>(basis.n_at(i), l) * R::of(0.5);
                entries.set(i, i + 1, Complex::new(zero, half_a));
                entries.set(i + 1, i, Complex::new(zero, -half_a));
            }
        }
        OperatorKind::PRho => {
            // columns of X solving rho X = (A_minus - A_plus); P_rho = (i/2) X
            let diag: Vec<R> = (0..dim)
                .map(|i| R::of(2.0) * R::from_uint(u64::from(basis.n_at(i))))
                .collect();
            let off: Vec<R> = (0..dim - 1)
                .map(|i| -raise_eigenvalue::<R>(basis.n_at(i), l))
                .collect();
            for j in 0..dim {
                let mut rhs = vec![zero; dim];
                if j > 0 {
                    // (A_minus - A_plus)[j-1][j] lives above the diagonal
                    rhs[j - 1] = raise_eigenvalue::<R>(basis.n_at(j - 1), l);
                }
                if j + 1 < dim {
                    rhs[j + 1] = -raise_eigenvalue::<R>(basis.n_at(j), l);
                }
                let x = tridiag_solve(&diag, &off, &rhs).map_err(|e| match e {
                    Error::SingularSystem { pivot, .. } => Error::SingularSystem {
                        pivot,
                        cond_estimate: tridiag_condition_estimate::<R>(&diag, &off),
                    },
                    other => other,
                })?;
                for (i, xi) in x.into_iter().enumerate() {
                    entries.set(i, j, Complex::new(zero, xi * R::of(0.5)));
                }
            }
        }
        OperatorKind::Q => {
            let s = R::of(0.5).sqrt();
            for i in 0..dim - 1 {
                let a = raise_eigenvalue::<R>(basis.n_at(i), l) * s;
                entries.set(i + 1, i, Complex::new(a, zero));
                entries.set(i, i + 1, Complex::new(a, zero));
            }
        }
        OperatorKind::P => {
            let s = R::of(0.5).sqrt();
            for i in 0..dim - 1 {
                let a = raise_eigenvalue::<R>(basis.n_at(i), l) * s;
                entries.set(i + 1, i, Complex::new(zero, a));
                entries.set(i, i + 1, Complex::new(zero, -a));
            }
        }
        OperatorKind::Custom => {
            return Err(Error::InvalidConfig(
                "Custom matrices arise from operator algebra, not build_operator".into(),
            ))
        }
    }
    Ok(OperatorMatrix {
        basis,
        kind,
        entries,
    })
}

impl<R: Real> OperatorMatrix<R> {
    pub fn basis(&self) -> TruncatedBasis {
        self.basis
    }

    pub fn kind(&self) -> OperatorKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.entries.dim()
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex<R> {
        self.entries.get(i, j)
    }

    /// Identity on a basis; useful for operator-algebra expressions.
    pub fn identity(basis: TruncatedBasis) -> Self {
        Self {
            basis,
            kind: OperatorKind::Custom,
            entries: CMatrix::identity(basis.dim()),
        }
    }

    fn check_same_basis(&self, rhs: &Self) -> Result<()> {
        if self.basis != rhs.basis {
            return Err(Error::BasisMismatch {
                l_left: self.basis.l(),
                n_max_left: self.basis.n_max(),
                l_right: rhs.basis.l(),
                n_max_right: rhs.basis.n_max(),
            });
        }
        Ok(())
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        self.check_same_basis(rhs)?;
        Ok(Self {
            basis: self.basis,
            kind: OperatorKind::Custom,
            entries: self.entries.mul(&rhs.entries),
        })
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_same_basis(rhs)?;
        Ok(Self {
            basis: self.basis,
            kind: OperatorKind::Custom,
            entries: self.entries.add(&rhs.entries),
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.check_same_basis(rhs)?;
        Ok(Self {
            basis: self.basis,
            kind: OperatorKind::Custom,
            entries: self.entries.sub(&rhs.entries),
        })
    }

    pub fn scale(&self, s: Complex<R>) -> Self {
        Self {
            basis: self.basis,
            kind: OperatorKind::Custom,
            entries: self.entries.scale(s),
        }
    }

    pub fn transpose(&self) -> Self {
        Self {
            basis: self.basis,
            kind: OperatorKind::Custom,
            entries: self.entries.transpose(),
        }
    }

    pub fn adjoint(&self) -> Self {
        Self {
            basis: self.basis,
            kind: OperatorKind::Custom,
            entries: self.entries.adjoint(),
        }
    }

    /// Drops the last row and column: the interior block on which truncation
    /// artifacts vanish. The result lives on the shrunk basis.
    pub fn interior(&self) -> Self {
        Self {
            basis: self.basis.shrunk(),
            kind: OperatorKind::Custom,
            entries: self.entries.leading_block(self.dim() - 1),
        }
    }

    pub fn diagonal(&self) -> Vec<Complex<R>> {
        self.entries.diagonal()
    }

    pub fn max_abs(&self) -> R {
        self.entries.max_abs()
    }

    pub fn max_abs_diff(&self, rhs: &Self) -> R {
        self.entries.max_abs_diff(&rhs.entries)
    }

    /// Matrix-vector product in the basis ordering.
    pub fn apply(&self, v: &[Complex<R>]) -> Result<Vec<Complex<R>>> {
        if v.len() != self.dim() {
            return Err(Error::BasisMismatch {
                l_left: self.basis.l(),
                n_max_left: self.basis.n_max(),
                l_right: self.basis.l(),
                n_max_right: self.basis.l() + v.len() as u32,
            });
        }
        Ok(self.entries.apply(v))
    }

    /// Row-major CSV with an `n=<value>` header per column; complex entries
    /// as `re+imi`.
    pub fn to_csv(&self) -> String {
        let dim = self.dim();
        let header: Vec<String> = (0..dim)
            .map(|j| format!("n{}", self.basis.n_at(j)))
            .collect();
        let mut out = header.join(",");
        out.push('\n');
        for i in 0..dim {
            let row: Vec<String> = (0..dim).map(|j| fmt_complex(self.entry(i, j))).collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    /// JSON object with the basis window and entries as nested arrays of
    /// [re, im] pairs.
    pub fn to_json(&self) -> String {
        let dim = self.dim();
        let mut rows = Vec::with_capacity(dim);
        for i in 0..dim {
            let cells: Vec<String> = (0..dim)
                .map(|j| {
                    let v = self.entry(i, j);
                    format!(
                        "[{:?},{:?}]",
                        v.re.to_f64().unwrap(),
                        v.im.to_f64().unwrap()
                    )
                })
                .collect();
            rows.push(format!("[{}]", cells.join(",")));
        }
        format!(
            "{{\"l\":{},\"n_max\":{},\"entries\":[{}]}}",
            self.basis.l(),
            self.basis.n_max(),
            rows.join(",")
        )
    }
}

fn fmt_complex<R: Real>(v: Complex<R>) -> String {
    let re = v.re.to_f64().unwrap();
    let im = v.im.to_f64().unwrap();
    if im >= 0.0 {
        format!("{re:?}+{im:?}i")
    } else {
        format!("{re:?}-{:?}i", -im)
    }
}

/// XY - YX on a shared basis.
pub fn commutator<R: Real>(x: &OperatorMatrix<R>, y: &OperatorMatrix<R>) -> Result<OperatorMatrix<R>> {
    x.matmul(y)?.sub(&y.matmul(x)?)
}

/// Diagonal matrix element <n l| op |n l>.
///
/// Requires one level of headroom (n < n_max) so diagonals of operator
/// products such as rho^2 are uncorrupted by the truncation.
pub fn expectation<R: Real>(op: &OperatorMatrix<R>, qn: QuantumNumbers) -> Result<Complex<R>> {
    let basis = op.basis();
    if qn.l() != basis.l() {
        return Err(Error::OutOfTruncation {
            n: qn.n(),
            l: basis.l(),
            n_max: basis.n_max(),
        });
    }
    if qn.n() >= basis.n_max() {
        return Err(Error::OutOfTruncation {
            n: qn.n(),
            l: basis.l(),
            n_max: basis.n_max(),
        });
    }
    let i = basis.index_of(qn.n())?;
    Ok(op.entry(i, i))
}

/// sigma_q * sigma_p on the basis state |n l> within an explicit basis;
/// requires two levels of headroom for the squared operators.
pub fn uncertainty_product_nl_in<R: Real>(
    basis: TruncatedBasis,
    qn: QuantumNumbers,
) -> Result<R> {
    if qn.n() + 2 > basis.n_max() {
        return Err(Error::InsufficientHeadroom {
            n: qn.n(),
            n_max: basis.n_max(),
        });
    }
    let q = build_operator::<R>(OperatorKind::Q, basis)?;
    let p = build_operator::<R>(OperatorKind::P, basis)?;
    let i = basis.index_of(qn.n())?;
    let q2 = q.matmul(&q)?;
    let p2 = p.matmul(&p)?;
    // <q> and <p> vanish on basis states (zero diagonals)
    let var_q = q2.entry(i, i).re;
    let var_p = p2.entry(i, i).re;
    debug_assert!(
        (var_q - var_p).abs() <= R::of(1e-10) * var_q.abs().max(R::one()),
        "q/p variances must coincide on basis states"
    );
    Ok((var_q * var_p).sqrt())
}

/// sigma_q * sigma_p on |n l> using the stock basis for its l.
pub fn uncertainty_product_nl<R: Real>(qn: QuantumNumbers) -> Result<R> {
    uncertainty_product_nl_in(TruncatedBasis::default_for_l(qn.l()), qn)
}
