//! ξ₁, ζ₁, the Bockstein of a lifted cochain, seeded random cochains and
//! cocycle spaces.

use super::cochain::{ad_left_pow, power, AssocAlgebra, Cochain};
use crate::error::{Error, Result};
use crate::int::Int;
use crate::ring::{inv_mod, is_prime, Ring};
use crate::sparse::{kernel_mod_p, solve_mod_p, to_spvec, SpVec, SparseMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn require_field(ring: Ring, p: u32) -> Result<()> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    if ring != Ring::PrimeField(p) {
        return Err(Error::RingMismatch(ring.name(), Ring::PrimeField(p).name()));
    }
    Ok(())
}

/// ξ₁(x) = x^[p], defined when p(deg(x) − 1) is even.
pub fn xi1(x: &Cochain, p: u32) -> Result<Cochain> {
    require_field(x.ring(), p)?;
    if p % 2 == 1 && x.degree() % 2 == 0 {
        return Err(Error::Hypothesis("p(deg(x)−1) being even".into()));
    }
    Ok(power(x, p as usize))
}

/// ζ₁(x) = Σ_{i=1}^{p−1} ((−1)^i / i)·x^[i] * x^[p−i], defined when p·deg(x) is odd.
pub fn zeta1(alg: &AssocAlgebra, x: &Cochain, p: u32) -> Result<Cochain> {
    require_field(x.ring(), p)?;
    if p % 2 == 0 || x.degree() % 2 == 0 {
        return Err(Error::Hypothesis("p·deg(x) being odd".into()));
    }
    let pp = p as usize;
    let powers: Vec<Cochain> = (0..pp).map(|i| if i == 0 { x.clone() } else { power(x, i) }).collect();
    let mut out: Option<Cochain> = None;
    for i in 1..pp {
        let inv = inv_mod(i as u64, p as u64) as i64;
        let c = if i % 2 == 0 { inv } else { -inv };
        let t = alg.cup(&powers[i], &powers[pp - i])?.scale(c);
        out = Some(match out {
            None => t,
            Some(o) => o.add(&t),
        });
    }
    Ok(out.expect("p ≥ 3"))
}

/// An integral cochain together with the prime it is read modulo.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedCochain {
    cochain: Cochain,
    p: u32,
}

impl LiftedCochain {
    pub fn new(cochain: Cochain, p: u32) -> Result<Self> {
        if cochain.ring() != Ring::Integers {
            return Err(Error::RingMismatch(cochain.ring().name(), "Z".into()));
        }
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        Ok(LiftedCochain { cochain, p })
    }

    /// Balanced lift of a mod-p cochain.
    pub fn lift(x: &Cochain) -> Result<Self> {
        let p = x.ring().characteristic();
        Self::new(x.change_ring(Ring::Integers), p)
    }

    pub fn integral(&self) -> &Cochain {
        &self.cochain
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn reduced(&self) -> Cochain {
        self.cochain.change_ring(Ring::PrimeField(self.p))
    }
}

/// βx = (1/p)·∂(lift) reduced mod p, computed in the integral complex of `alg_z`.
pub fn bockstein_chain(alg_z: &AssocAlgebra, x: &LiftedCochain) -> Result<Cochain> {
    if alg_z.ring() != Ring::Integers {
        return Err(Error::RingMismatch(alg_z.ring().name(), "Z".into()));
    }
    let d = alg_z.differential(&x.cochain)?;
    let q = d.div_exact(x.p as i64).ok_or(Error::NotModPCycle)?;
    Ok(q.change_ring(Ring::PrimeField(x.p)))
}

/// Both sides of ζ₁x = β(ξ₁x) − ad^{p−1}x(βx), all reduced mod p.
pub struct ZetaBocksteinSides {
    pub zeta: Cochain,
    pub beta_xi: Cochain,
    pub ad_term: Cochain,
}

impl ZetaBocksteinSides {
    pub fn rhs(&self) -> Cochain {
        self.beta_xi.sub(&self.ad_term)
    }

    pub fn holds(&self) -> bool {
        self.zeta == self.rhs()
    }
}

pub fn zeta_bockstein_sides(alg_z: &AssocAlgebra, x: &LiftedCochain) -> Result<ZetaBocksteinSides> {
    let p = x.p;
    let fp = Ring::PrimeField(p);
    let alg_p = alg_z.change_ring(fp)?;
    let xr = x.reduced();
    let zeta = zeta1(&alg_p, &xr, p)?;
    let xi_lift = LiftedCochain::new(power(&x.cochain, p as usize), p)?;
    let beta_xi = bockstein_chain(alg_z, &xi_lift)?;
    let bx = bockstein_chain(alg_z, x)?;
    let ad_term = ad_left_pow(&xr, &bx, p as usize - 1);
    Ok(ZetaBocksteinSides { zeta, beta_xi, ad_term })
}

/// Independent PRNG stream for one trial of a seeded run.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(trial);
    r
}

/// Uniform entries in `0..p`, or in `−2..=2` over ℤ.
pub fn random_cochain<R: Rng>(alg: &AssocAlgebra, arity: usize, rng: &mut R) -> Cochain {
    let len = alg.dim().pow(arity as u32 + 1);
    let entries: Vec<Int> = match alg.ring() {
        Ring::PrimeField(p) => (0..len).map(|_| Int::from(rng.gen_range(0..p as i64))).collect(),
        Ring::Integers => (0..len).map(|_| Int::from(rng.gen_range(-2..=2i64))).collect(),
    };
    Cochain::from_entries(alg.ring(), alg.dim(), arity, entries).expect("shape")
}

/// Matrix of ∂ from arity `m` to arity `m + 1`, columns indexed by the basis cochains.
pub fn differential_matrix(alg: &AssocAlgebra, arity: usize) -> SparseMatrix {
    let d = alg.dim();
    let mut m = SparseMatrix::zero(d.pow(arity as u32 + 2), 0);
    for idx in 0..d.pow(arity as u32 + 1) {
        let e = Cochain::unit_vector(alg.ring(), d, arity, idx);
        let de = alg.differential(&e).expect("same algebra");
        m.push_col(de.entries().into_iter().enumerate().filter(|(_, c)| !c.is_zero()), alg.ring());
    }
    m
}

/// The cocycles of a given arity over a prime field, as a kernel basis.
pub struct CocycleSpace {
    alg: AssocAlgebra,
    arity: usize,
    basis: Vec<SpVec>,
}

impl CocycleSpace {
    pub fn new(alg: &AssocAlgebra, arity: usize) -> Result<Self> {
        let Ring::PrimeField(p) = alg.ring() else { return Err(Error::IntegralHomology) };
        let basis = kernel_mod_p(&differential_matrix(alg, arity), p as u64);
        Ok(CocycleSpace { alg: alg.clone(), arity, basis })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn random<R: Rng>(&self, rng: &mut R) -> Cochain {
        let p = self.alg.ring().characteristic() as u64;
        let len = self.alg.dim().pow(self.arity as u32 + 1);
        let mut acc = vec![0u64; len];
        for v in &self.basis {
            let c = rng.gen_range(0..p);
            if c == 0 {
                continue;
            }
            for &(i, e) in v {
                acc[i] = (acc[i] + c * e) % p;
            }
        }
        Cochain::from_entries(self.alg.ring(), self.alg.dim(), self.arity, acc.into_iter().map(Int::from).collect()).expect("shape")
    }
}

/// Whether a cochain over a prime field lies in the image of ∂.
pub fn is_coboundary(alg: &AssocAlgebra, z: &Cochain) -> Result<bool> {
    let Ring::PrimeField(p) = alg.ring() else { return Err(Error::IntegralHomology) };
    if z.is_zero() {
        return Ok(true);
    }
    if z.arity() == 0 {
        return Ok(false);
    }
    let m = differential_matrix(alg, z.arity() - 1);
    let v: Vec<(usize, Int)> = z.entries().into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
    Ok(solve_mod_p(&m, &to_spvec(&v, p as u64), p as u64).is_some())
}
