//! Lattice and polynomial-lattice node sets, the hybrid product of the two,
//! the worst-case integration error of the associated QMC rule, and the
//! greedy component-by-component generator search.

use num_integer::Integer;

use crate::arith::{index_digit_sub, mu, zeta, Rational01};
use crate::error::{Error, Result};
use crate::fbpoly::{nu_m, FbPoly};
use crate::space::{korobov_factor, walsh_factor_from_first_digit, SpaceParams, WeightSpec};

/// A QMC node set on `[0,1)^{s+t}`: digital (polynomial-lattice) coordinates
/// paired with classical lattice coordinates, node by node.
#[derive(Clone, Debug)]
pub struct HybridPointSet {
    base: u32,
    m: u32,
    n: u64,
    walsh_part: Vec<Vec<Rational01>>,
    trig_part: Vec<Vec<Rational01>>,
    gen_poly: Vec<FbPoly>,
    modulus: Option<FbPoly>,
    gen_int: Vec<u64>,
    /// Built from generators: node differences are again nodes, which the
    /// error computations exploit.
    structured: bool,
}

/// The multiplicative group Z_N = {z in 1..N : gcd(z, N) = 1} membership test.
fn check_lattice_generator(z: u64, n: u64) -> Result<()> {
    if z == 0 || z >= n || z.gcd(&n) != 1 {
        return Err(Error::parameter(format!(
            "lattice generator {z} is not in Z_{n}"
        )));
    }
    Ok(())
}

/// Node matrix of the rank-1 lattice rule: row v is ({v z_1/N}, …, {v z_t/N}).
pub fn lattice_pointset(n: u64, z: &[u64]) -> Result<Vec<Vec<Rational01>>> {
    if n == 0 {
        return Err(Error::parameter("node count must be positive"));
    }
    for &zj in z {
        check_lattice_generator(zj, n)?;
    }
    Ok((0..n)
        .map(|v| {
            z.iter()
                .map(|&zj| Rational01::from_mod(u128::from(v) * u128::from(zj), n))
                .collect()
        })
        .collect())
}

/// Node matrix of the polynomial lattice rule: row v (in integer index order)
/// applies the Laurent truncation map to v·g_j/f.
pub fn polynomial_lattice_pointset(
    base: u32,
    m: u32,
    f: &FbPoly,
    g: &[FbPoly],
) -> Result<Vec<Vec<Rational01>>> {
    if f.deg() != Some(m as usize) {
        return Err(Error::parameter(format!(
            "modulus degree {:?} does not match m = {m}",
            f.deg()
        )));
    }
    let n = u64::from(base)
        .checked_pow(m)
        .ok_or_else(|| Error::parameter("b^m overflows"))?;
    let mut rows = Vec::with_capacity(n as usize);
    for v in 0..n {
        let vp = FbPoly::from_index(base, v)?;
        let row = g
            .iter()
            .map(|gj| nu_m(&vp, gj, f, m))
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    Ok(rows)
}

impl HybridPointSet {
    /// Builds the hybrid node set from a polynomial-lattice generator vector
    /// and a lattice generator vector sharing the node count N = b^m.
    pub fn from_generators(
        base: u32,
        m: u32,
        f: FbPoly,
        gen_poly: Vec<FbPoly>,
        gen_int: Vec<u64>,
    ) -> Result<Self> {
        if m == 0 {
            return Err(Error::parameter("precision m must be positive"));
        }
        let n = u64::from(base)
            .checked_pow(m)
            .ok_or_else(|| Error::parameter("b^m overflows"))?;
        let walsh_part = polynomial_lattice_pointset(base, m, &f, &gen_poly)?;
        let trig_cols: Vec<u64> = gen_int.clone();
        let trig_part = lattice_pointset(n, &trig_cols)?;
        Ok(HybridPointSet {
            base,
            m,
            n,
            walsh_part,
            trig_part,
            gen_poly,
            modulus: Some(f),
            gen_int,
            structured: true,
        })
    }

    /// Wraps explicit node matrices. Digital coordinates must be m-digit
    /// base-b rationals and lattice coordinates rationals over N, so the
    /// kernel identities stay exact. m = 0 (a single node) is allowed.
    pub fn from_parts(
        base: u32,
        m: u32,
        walsh_part: Vec<Vec<Rational01>>,
        trig_part: Vec<Vec<Rational01>>,
    ) -> Result<Self> {
        crate::arith::check_prime_base(base)?;
        let n = u64::from(base)
            .checked_pow(m)
            .ok_or_else(|| Error::parameter("b^m overflows"))?;
        if walsh_part.len() != n as usize || trig_part.len() != n as usize {
            return Err(Error::parameter(format!(
                "expected {n} rows, got {} digital and {} lattice rows",
                walsh_part.len(),
                trig_part.len()
            )));
        }
        let s = walsh_part.first().map_or(0, Vec::len);
        let t = trig_part.first().map_or(0, Vec::len);
        let bm = u128::from(u64::from(base)).pow(m);
        for row in &walsh_part {
            if row.len() != s {
                return Err(Error::dimension("ragged digital rows"));
            }
            for x in row {
                if bm % u128::from(x.denom()) != 0 {
                    return Err(Error::Precision(format!(
                        "digital coordinate {x} needs more than {m} base-{base} digits"
                    )));
                }
            }
        }
        for row in &trig_part {
            if row.len() != t {
                return Err(Error::dimension("ragged lattice rows"));
            }
            for y in row {
                if n % y.denom() != 0 {
                    return Err(Error::Precision(format!(
                        "lattice coordinate {y} has denominator not dividing N = {n}"
                    )));
                }
            }
        }
        Ok(HybridPointSet {
            base,
            m,
            n,
            walsh_part,
            trig_part,
            gen_poly: Vec::new(),
            modulus: None,
            gen_int: Vec::new(),
            structured: false,
        })
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn precision(&self) -> u32 {
        self.m
    }

    pub fn len(&self) -> u64 {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dim_walsh(&self) -> usize {
        self.walsh_part.first().map_or(0, Vec::len)
    }

    pub fn dim_trig(&self) -> usize {
        self.trig_part.first().map_or(0, Vec::len)
    }

    pub fn walsh_point(&self, v: u64) -> &[Rational01] {
        &self.walsh_part[v as usize]
    }

    pub fn trig_point(&self, v: u64) -> &[Rational01] {
        &self.trig_part[v as usize]
    }

    pub fn modulus(&self) -> Option<&FbPoly> {
        self.modulus.as_ref()
    }

    pub fn gen_poly(&self) -> &[FbPoly] {
        &self.gen_poly
    }

    pub fn gen_int(&self) -> &[u64] {
        &self.gen_int
    }

    pub fn is_structured(&self) -> bool {
        self.structured
    }

    fn check_space(&self, space: &SpaceParams) -> Result<()> {
        if self.base != space.base {
            return Err(Error::parameter(format!(
                "point-set base {} does not match space base {}",
                self.base, space.base
            )));
        }
        if self.dim_walsh() != space.s || self.dim_trig() != space.t {
            return Err(Error::dimension(format!(
                "point set is ({},{})-dimensional, space is ({},{})",
                self.dim_walsh(),
                self.dim_trig(),
                space.s,
                space.t
            )));
        }
        Ok(())
    }
}

/// Per-coordinate kernel factors indexed by the node-difference index. For a
/// generator-built set the difference of nodes v and w is the node at index
/// v ⊖ w (digitwise) in the digital part and (v - w) mod N in the lattice
/// part, so one factor vector per coordinate covers all pairs.
struct DiffKernel {
    base: u32,
    n: u64,
    walsh_vecs: Vec<Vec<f64>>,
    trig_vecs: Vec<Vec<f64>>,
}

impl DiffKernel {
    fn new(base: u32, n: u64) -> Self {
        DiffKernel {
            base,
            n,
            walsh_vecs: Vec::new(),
            trig_vecs: Vec::new(),
        }
    }

    /// Σ over all N² ordered node pairs of the kernel factor product, with the
    /// candidate vectors (if any) multiplied in. Accumulation is compensated
    /// and runs in fixed index order.
    fn gram_sum(&self, cand_walsh: Option<&[f64]>, cand_trig: Option<&[f64]>) -> f64 {
        let n = self.n;
        let needs_walsh = !self.walsh_vecs.is_empty() || cand_walsh.is_some();
        let needs_trig = !self.trig_vecs.is_empty() || cand_trig.is_some();
        let mut sum = 0.0f64;
        let mut comp = 0.0f64;
        let mut add = |term: f64| {
            let y = term - comp;
            let t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        };
        // diagonal: difference index 0 in both parts
        let mut diag = 1.0f64;
        for vec in &self.walsh_vecs {
            diag *= vec[0];
        }
        if let Some(c) = cand_walsh {
            diag *= c[0];
        }
        for vec in &self.trig_vecs {
            diag *= vec[0];
        }
        if let Some(c) = cand_trig {
            diag *= c[0];
        }
        add(diag * n as f64);
        for v in 0..n {
            for w in (v + 1)..n {
                let mut prod = 1.0f64;
                if needs_walsh {
                    let dw = if self.base == 2 {
                        v ^ w
                    } else {
                        index_digit_sub(self.base, v, w)
                    } as usize;
                    for vec in &self.walsh_vecs {
                        prod *= vec[dw];
                    }
                    if let Some(c) = cand_walsh {
                        prod *= c[dw];
                    }
                }
                if needs_trig {
                    let dt = (w - v) as usize;
                    for vec in &self.trig_vecs {
                        prod *= vec[dt];
                    }
                    if let Some(c) = cand_trig {
                        prod *= c[dt];
                    }
                }
                add(2.0 * prod);
            }
        }
        sum
    }
}

fn error_sq_from_gram(n: u64, gram: f64) -> f64 {
    let e2 = gram / (n as f64 * n as f64) - 1.0;
    e2.max(0.0)
}

/// Worst-case integration error of the equal-weight QMC rule over the node
/// set, in the unit ball of the space: sqrt(-1 + N^{-2} Σ_{v,w} K(x_v, x_w)).
pub fn qmc_int_error(
    ps: &HybridPointSet,
    space: &SpaceParams,
    weights: &WeightSpec,
) -> Result<f64> {
    ps.check_space(space)?;
    if space.dim() == 0 {
        return Ok(0.0);
    }
    let gram = if ps.structured {
        structured_diff_kernel(ps, space, weights)?.gram_sum(None, None)
    } else {
        generic_gram_sum(ps, space, weights)?
    };
    Ok(error_sq_from_gram(ps.n, gram).sqrt())
}

fn structured_diff_kernel(
    ps: &HybridPointSet,
    space: &SpaceParams,
    weights: &WeightSpec,
) -> Result<DiffKernel> {
    let mut dk = DiffKernel::new(ps.base, ps.n);
    for j in 0..space.s {
        let gamma = weights.gamma1(j + 1)?;
        dk.walsh_vecs
            .push(walsh_factor_column(ps, j, space.alpha, gamma)?);
    }
    for j in 0..space.t {
        let gamma = weights.gamma2(j + 1)?;
        dk.trig_vecs
            .push(trig_factor_column(ps, j, space.beta, gamma)?);
    }
    Ok(dk)
}

fn walsh_factor_column(
    ps: &HybridPointSet,
    j: usize,
    alpha: f64,
    gamma: f64,
) -> Result<Vec<f64>> {
    (0..ps.n)
        .map(|v| {
            let x = &ps.walsh_part[v as usize][j];
            walsh_factor_from_first_digit(ps.base, alpha, gamma, x.first_nonzero_digit(ps.base))
        })
        .collect()
}

fn trig_factor_column(ps: &HybridPointSet, j: usize, beta: f64, gamma: f64) -> Result<Vec<f64>> {
    (0..ps.n)
        .map(|v| korobov_factor(beta, gamma, &ps.trig_part[v as usize][j]))
        .collect()
}

fn generic_gram_sum(
    ps: &HybridPointSet,
    space: &SpaceParams,
    weights: &WeightSpec,
) -> Result<f64> {
    use std::collections::HashMap;
    let n = ps.n;
    let gammas1: Vec<f64> = (1..=space.s)
        .map(|j| weights.gamma1(j))
        .collect::<Result<_>>()?;
    let gammas2: Vec<f64> = (1..=space.t)
        .map(|j| weights.gamma2(j))
        .collect::<Result<_>>()?;
    // the trig factor can be series-priced at non-even beta; memoize by the
    // folded difference
    let mut trig_memo: Vec<HashMap<Rational01, f64>> = vec![HashMap::new(); space.t];
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    let mut add = |term: f64| {
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    };
    for v in 0..n {
        for w in v..n {
            let mut prod = 1.0f64;
            for j in 0..space.s {
                let x = &ps.walsh_part[v as usize][j];
                let y = &ps.walsh_part[w as usize][j];
                prod *= walsh_factor_from_first_digit(
                    ps.base,
                    space.alpha,
                    gammas1[j],
                    x.first_digit_difference(y, ps.base),
                )?;
            }
            for j in 0..space.t {
                let diff = ps.trig_part[v as usize][j].sub_mod1(&ps.trig_part[w as usize][j]);
                let f = match trig_memo[j].get(&diff) {
                    Some(f) => *f,
                    None => {
                        let f = korobov_factor(space.beta, gammas2[j], &diff)?;
                        trig_memo[j].insert(diff, f);
                        f
                    }
                };
                prod *= f;
            }
            add(if v == w { prod } else { 2.0 * prod });
        }
    }
    Ok(sum)
}

/// Squared upper bound on the worst-case integration error of the CBC
/// construction: (2/N) Π (1 + 2 γ_j^{(1)} μ(α)) Π (1 + 4 γ_j^{(2)} ζ(β)).
pub fn qmc_error_bound_sq(space: &SpaceParams, weights: &WeightSpec, n: u64) -> Result<f64> {
    let mu_a = mu(space.base, space.alpha)?;
    let zeta_b = zeta(space.beta)?;
    let mut bound = 2.0 / n as f64;
    for j in 1..=space.s {
        bound *= 1.0 + 2.0 * weights.gamma1(j)? * mu_a;
    }
    for j in 1..=space.t {
        bound *= 1.0 + 4.0 * weights.gamma2(j)? * zeta_b;
    }
    Ok(bound)
}

/// Outcome of the component-by-component search.
#[derive(Clone, Debug)]
pub struct CbcResult {
    pub point_set: HybridPointSet,
    /// Worst-case integration error of the constructed rule.
    pub int_error: f64,
    /// The qmc_error_bound_sq value, square-rooted, that the construction is
    /// guaranteed to meet.
    pub bound: f64,
}

/// Greedy component-by-component construction: digital generator components
/// first (over nonzero index polynomials), then lattice components (over
/// Z_N), each chosen to minimize the worst-case integration error of the
/// partial rule, ties broken by the smallest integer encoding.
pub fn cbc_construct(
    space: &SpaceParams,
    weights: &WeightSpec,
    m: u32,
    modulus: Option<FbPoly>,
) -> Result<CbcResult> {
    if m == 0 {
        return Err(Error::parameter(
            "m = 0 leaves no generator candidates to search",
        ));
    }
    let base = space.base;
    let n = u64::from(base)
        .checked_pow(m)
        .ok_or_else(|| Error::parameter("b^m overflows"))?;
    let f = match modulus {
        Some(f) => {
            if f.base() != base {
                return Err(Error::parameter("modulus base does not match space"));
            }
            if f.deg() != Some(m as usize) {
                return Err(Error::parameter(format!(
                    "modulus degree {:?} does not match m = {m}",
                    f.deg()
                )));
            }
            f
        }
        None => FbPoly::smallest_irreducible(base, m)?,
    };

    let mut dk = DiffKernel::new(base, n);
    let mut gen_poly: Vec<FbPoly> = Vec::with_capacity(space.s);
    let mut last_gram = None;

    for j in 0..space.s {
        let gamma = weights.gamma1(j + 1)?;
        let mut best: Option<(u64, f64)> = None;
        for cand in 1..n {
            let cand_poly = FbPoly::from_index(base, cand)?;
            let column: Vec<f64> = (0..n)
                .map(|v| {
                    let vp = FbPoly::from_index(base, v)?;
                    let x = nu_m(&vp, &cand_poly, &f, m)?;
                    walsh_factor_from_first_digit(
                        base,
                        space.alpha,
                        gamma,
                        x.first_nonzero_digit(base),
                    )
                })
                .collect::<Result<_>>()?;
            let gram = dk.gram_sum(Some(&column), None);
            if best.as_ref().map_or(true, |&(_, g)| gram < g) {
                best = Some((cand, gram));
            }
        }
        let (chosen, gram) = best.expect("nonzero candidate set");
        let chosen_poly = FbPoly::from_index(base, chosen)?;
        let column = (0..n)
            .map(|v| {
                let vp = FbPoly::from_index(base, v)?;
                let x = nu_m(&vp, &chosen_poly, &f, m)?;
                walsh_factor_from_first_digit(
                    base,
                    space.alpha,
                    gamma,
                    x.first_nonzero_digit(base),
                )
            })
            .collect::<Result<_>>()?;
        dk.walsh_vecs.push(column);
        gen_poly.push(chosen_poly);
        last_gram = Some(gram);
    }

    let mut gen_int: Vec<u64> = Vec::with_capacity(space.t);
    for j in 0..space.t {
        let gamma = weights.gamma2(j + 1)?;
        let mut best: Option<(u64, f64)> = None;
        for cand in (1..n).filter(|z| z.gcd(&n) == 1) {
            let column: Vec<f64> = (0..n)
                .map(|v| {
                    let y = Rational01::from_mod(u128::from(v) * u128::from(cand), n);
                    korobov_factor(space.beta, gamma, &y)
                })
                .collect::<Result<_>>()?;
            let gram = dk.gram_sum(None, Some(&column));
            if best.as_ref().map_or(true, |&(_, g)| gram < g) {
                best = Some((cand, gram));
            }
        }
        let (chosen, gram) = best.ok_or_else(|| {
            Error::parameter(format!("Z_{n} is empty, no lattice generator exists"))
        })?;
        let column = (0..n)
            .map(|v| {
                let y = Rational01::from_mod(u128::from(v) * u128::from(chosen), n);
                korobov_factor(space.beta, gamma, &y)
            })
            .collect::<Result<_>>()?;
        dk.trig_vecs.push(column);
        gen_int.push(chosen);
        last_gram = Some(gram);
        let _ = j;
    }

    let error_sq = match last_gram {
        Some(g) => error_sq_from_gram(n, g),
        None => 0.0, // no coordinates at all
    };
    let bound_sq = qmc_error_bound_sq(space, weights, n)?;
    if error_sq > bound_sq * (1.0 + 1e-9) + 1e-12 {
        return Err(Error::Inconsistency(format!(
            "constructed rule has squared error {error_sq}, above its guarantee {bound_sq}"
        )));
    }
    let point_set = HybridPointSet::from_generators(base, m, f, gen_poly, gen_int)?;
    Ok(CbcResult {
        point_set,
        int_error: error_sq.sqrt(),
        bound: bound_sq.sqrt(),
    })
}
