use std::f64::consts::PI;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::complexspace::{
    direction_net, monte_carlo_volume, random_unit, s1_invariance_defect, CmBody, CompiledBody, OracleTerm, PolytopeCm, SupportOracleCm,
};
use crate::diffbody::{convolve_measures, dc_planar, dc_planar_sampled, dc_polytope};
use crate::harmonic::{
    build_ortho_q, eigenfunction_check, gauss_legendre, harmonicity_check, kernel_component_sampled, multiplier_table,
    planar_multiplier_check, pole_coordinate, s3_quadrature, DiskPolynomial, S3Quadrature,
};
use crate::planar::{area_measure, fourier_support, Convention, Point2, Polygon2, SampledSupport2};
use crate::{Complex, Error, Result};

use super::classify::{classify_m1, classify_m2, KernelProbe};
use super::corpus::{complex_corpus, planar_classification_corpus, planar_corpus, random_polygon, scalene};
use super::demo::{dimension_table, nonsurjectivity_demo};
use super::fixed::{fixed_point_check_m1, fixed_point_check_m2, iterate_check, iteration_condition};
use super::inequalities::{
    brunn_minkowski_check, containment_check, mixed_volume_check_m1, quermass_check_m1, volume_check_m2,
    width_diameter_check_m1, width_diameter_check_m2,
};
use super::{Check, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Planar,
    Complex2,
    Harmonic,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "planar" => Ok(Suite::Planar),
            "complex2" => Ok(Suite::Complex2),
            "harmonic" => Ok(Suite::Harmonic),
            "all" => Ok(Suite::All),
            _ => Err(Error::InvalidInput(format!("unknown suite {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub samples: usize,
    pub passed: bool,
    pub sections: Vec<Report>,
}

/// Runs a verification suite. `samples` is the Monte-Carlo sample count for
/// the `ℂ²` volume checks. Output is deterministic for a fixed seed.
pub fn run_suite(suite: Suite, seed: u64, samples: usize) -> Result<SuiteReport> {
    let mut sections = Vec::new();
    if matches!(suite, Suite::Planar | Suite::All) {
        sections.extend(planar_suite(seed)?);
    }
    if matches!(suite, Suite::Complex2 | Suite::All) {
        sections.extend(complex2_suite(seed, samples)?);
    }
    if matches!(suite, Suite::Harmonic | Suite::All) {
        sections.extend(harmonic_suite(seed)?);
    }
    let passed = sections.iter().all(Report::passed);
    Ok(SuiteReport { suite, seed, samples, passed, sections })
}

fn prefixed(i: usize, mut r: Report) -> Report {
    for c in &mut r.checks {
        c.name = format!("pair {i}: {}", c.name);
    }
    r
}

fn planar_suite(seed: u64) -> Result<Vec<Report>> {
    let corpus = planar_corpus(seed, 100);
    let mut quermass = Report::new("planar: quermassintegrals");
    let mut widths = Report::new("planar: width, diameter, circumradius");
    let mut mixed = Report::new("planar: mixed volume");
    let mut bm = Report::new("planar: Brunn-Minkowski");
    let mut contain = Report::new("planar: containment");
    for (i, (c, k)) in corpus.iter().enumerate() {
        quermass.extend(prefixed(i, quermass_check_m1(c, &k.clone().into())?));
        widths.extend(prefixed(i, width_diameter_check_m1(c, k)?));
        mixed.extend(prefixed(i, mixed_volume_check_m1(c, k)));
        let l = &corpus[(i + 1) % corpus.len()].1;
        bm.extend(prefixed(i, brunn_minkowski_check(c, k, l)));
        contain.extend(prefixed(i, containment_check(c, k)?));
    }
    let seg = Polygon2::interval();
    for (i, (_, k)) in corpus.iter().take(20).enumerate() {
        widths.extend(prefixed(i, width_diameter_check_m1(&seg, k)?));
    }
    let disc = SampledSupport2::disc(1024, 0.6, Point2::zeros())?;
    let mut r = quermass_check_m1(&Polygon2::unit_square(), &disc.into())?;
    r.checks[0] = Check::equal("disc: area(D) = l^2 area(K)", r.checks[0].lhs, r.checks[0].rhs, 1e-9);
    quermass.extend(r);

    let mut identities = Report::new("planar: identities");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x1d);
    let mut worst_classical: f64 = 0.0;
    for _ in 0..50 {
        let k = random_polygon(&mut rng, 9);
        let d = dc_planar(&seg, &k);
        worst_classical = worst_classical.max(d.vertex_distance(&k.minkowski_sum(&k.reflect())).unwrap_or(f64::INFINITY));
    }
    identities.push(Check::at_most("D_I K = K + (-K) vertex-wise", worst_classical, 0.0, 1e-12));
    let tri = Polygon2::from_points(&[Point2::new(0.0, 0.0), Point2::new(1.0, 0.0), Point2::new(0.0, 1.0)])?;
    identities.push(Check::equal("area(D_I T) = 3", dc_planar(&seg, &tri).area(), 3.0, 1e-9));
    let (mut dt, mut dw) = (0.0f64, 0.0f64);
    for (c, k) in corpus.iter().take(50) {
        let got = area_measure(&dc_planar(c, k));
        let want = convolve_measures(&area_measure(c), &area_measure(k));
        let (t, w) = got.atom_distance(&want).unwrap_or((f64::INFINITY, f64::INFINITY));
        dt = dt.max(t);
        dw = dw.max(w);
    }
    identities.push(Check::at_most("S(D_C K) = S_C * S_K: angles", dt, 0.0, 1e-9));
    identities.push(Check::at_most("S(D_C K) = S_C * S_K: weights", dw, 0.0, 1e-9));
    let mut worst_mult: f64 = 0.0;
    for (c, k) in &corpus {
        worst_mult = worst_mult.max(planar_multiplier_check(c, &k.clone().into(), 32)?);
    }
    identities.push(Check::at_most("multiplier identity, J = 32", worst_mult, 0.0, 1e-8));
    let lam = multiplier_table(&seg, 32);
    let interval_defect = (0..=32)
        .map(|j| (lam.get(j, 0).unwrap_or_default() - (1.0 + (-1f64).powi(j as i32))).norm())
        .fold(0.0, f64::max);
    identities.push(Check::at_most("interval multipliers 1 + (-1)^j", interval_defect, 0.0, 1e-12));

    let reuleaux = SampledSupport2::reuleaux_triangle(1024)?;
    let c4 = Polygon2::regular(4, 0.25, 0.0)?;
    let d = dc_planar_sampled(&c4.clone().into(), &reuleaux)?;
    let dev = d.values().iter().map(|h| (h - 0.5).abs()).fold(0.0, f64::max);
    identities.push(Check::at_most("Reuleaux with symmetric C is the ball of radius 1/2", dev, 0.0, 1e-4));

    let mut fixed = Report::new("planar: fixed points and iteration");
    let disc = SampledSupport2::disc(1024, 0.8, Point2::new(0.3, -0.2))?;
    let mut worst_disc: f64 = 0.0;
    for (c, _) in corpus.iter().take(10) {
        worst_disc = worst_disc.max(fixed_point_check_m1(c, &disc.clone().into())?);
    }
    fixed.push(Check::at_most("disc: D_C K = l(C) K", worst_disc, 0.0, 1e-9));
    let sq = Polygon2::rect(-0.5, -0.5, 0.5, 0.5)?;
    fixed.push(Check::at_most("C4 fixes the aligned square", fixed_point_check_m1(&c4, &sq.into())?, 0.0, 1e-9));
    fixed.push(Check::at_least("C4 moves the scalene triangle", fixed_point_check_m1(&c4, &scalene().into())?, 0.01, 0.0));
    let mut worst_iter: f64 = 0.0;
    for (_, k) in corpus.iter().take(10) {
        worst_iter = worst_iter.max(iterate_check(&seg, k, 2)).max(iterate_check(&c4, k, 3));
    }
    fixed.push(Check::at_most("D^N = l^(N-1) D for segment and C4", worst_iter, 0.0, 1e-8));
    fixed.push(Check::holds("segment and C4 satisfy the multiplier condition", iteration_condition(&seg, 2, 64, 1e-9) && iteration_condition(&c4, 3, 64, 1e-9)));
    let tri_c = Polygon2::from_points(&[Point2::new(0.0, 0.0), Point2::new(2.0, 0.0), Point2::new(0.5, 0.9)])?;
    fixed.push(Check::holds("scalene C violates the multiplier condition", !iteration_condition(&tri_c, 2, 64, 1e-9)));
    fixed.push(Check::at_least("scalene C: D^2 differs from l D", iterate_check(&tri_c, &corpus[0].1, 2), 1e-6, 0.0));

    let mut classes = Report::new("planar: classification");
    let mut agree = 0;
    let mut total = 0;
    for (c, k) in planar_classification_corpus(seed)? {
        let cl = classify_m1(&c, &k, 16, 1e-6)?;
        total += 1;
        agree += cl.agree() as usize;
    }
    classes.push(Check::equal("predicted = observed (J = 16, eps = 1e-6)", agree as f64, total as f64, 0.0));

    let mut demo = Report::new("planar: non-surjectivity and non-injectivity");
    let ns = nonsurjectivity_demo()?;
    demo.push(Check::at_least("scalene triangle stays away from the catalogue", ns.best_relative_distance, 0.05, 0.0));
    demo.push(Check::at_most("D_I K = D_I(-K)", ns.reflection_defect, 0.0, 1e-12));
    demo.push(Check::at_most("D_(rho C) K = D_C(rho K)", ns.homogeneity_defect, 0.0, 1e-12));

    Ok(vec![quermass, widths, mixed, bm, contain, identities, fixed, classes, demo])
}

fn complex2_suite(seed: u64, samples: usize) -> Result<Vec<Report>> {
    let corpus = complex_corpus(seed, 20)?;
    let mut volume = Report::new("complex2: volume bounds");
    let mut widths = Report::new("complex2: width, diameter, circumradius");
    for (i, (c, k)) in corpus.iter().enumerate() {
        volume.extend(prefixed(i, volume_check_m2(c, k, samples, seed.wrapping_add(i as u64))?));
        widths.extend(prefixed(i, width_diameter_check_m2(c, k, 256, seed)));
    }

    let mut dims = Report::new("complex2: dimension table");
    for row in dimension_table(seed)? {
        dims.push(Check::equal(format!("(l, a) = ({}, {})", row.l, row.a), row.observed as f64, row.expected as f64, 0.0));
    }
    let sq = Polygon2::unit_square();
    let seg = PolytopeCm::segment(&[0.0; 4], &[1.0, 0.0, 0.0, 0.0])?;
    let d = dc_polytope(&sq, &seg.into());
    let est = monte_carlo_volume(&CompiledBody::from_oracle(&d), samples.min(10_000), seed)?;
    dims.push(Check::at_most("segment: vol_4(D) is 0", est.estimate, 0.0, 0.0));

    let mut fixed = Report::new("complex2: fixed points and S1-invariance");
    let quad = S3Quadrature::standard();
    let ball = CmBody::ball(2, 1.1)?;
    let mut worst: f64 = 0.0;
    for (c, _) in corpus.iter().take(5) {
        worst = worst.max(fixed_point_check_m2(c, &ball, &quad));
    }
    fixed.push(Check::at_most("ball: D_C K = l(C) K", worst, 0.0, 1e-9));
    fixed.push(Check::at_most("ball is S1-invariant", s1_invariance_defect(&ball, 16), 0.0, 1e-12));
    let disc = Polygon2::regular(256, 2.0 * (PI / 256.0).sin(), 0.0)?;
    let in_line = |j| -> Result<OracleTerm> {
        Ok(OracleTerm { s: 1.0, theta: 0.0, base: PolytopeCm::polygon_in_line(&disc, 2, j)?.into() })
    };
    let bb = SupportOracleCm::new(2, vec![in_line(0)?, in_line(1)?])?;
    let tol = 2.0 * (1.0 - (PI / 256.0).cos());
    fixed.push(Check::at_most("disc x disc is S1-invariant up to discretization", s1_invariance_defect(&bb, 16), tol, 0.0));
    let real_sq = PolytopeCm::from_polygon(&Polygon2::rect(-0.5, -0.5, 0.5, 0.5)?);
    fixed.push(Check::at_least("real square is not S1-invariant", s1_invariance_defect(&real_sq, 8), 0.2, 0.0));

    let mut classes = Report::new("complex2: classification");
    let probe = KernelProbe::standard(seed)?;
    let (mut agree, mut total) = (0, 0);
    let disc_c = Polygon2::regular(64, 0.05, 0.0)?;
    let mut s1_all = true;
    for (c, k) in &corpus {
        let cl = classify_m2(c, &k.body, &probe, 1e-6)?;
        agree += cl.agree() as usize;
        total += 1;
        let cl = classify_m2(&disc_c, &k.body, &probe, 1e-6)?;
        agree += cl.agree() as usize;
        total += 1;
        s1_all &= cl.observed.s1_invariant;
    }
    classes.push(Check::equal("predicted = observed (k + l <= 6, eps = 1e-6)", agree as f64, total as f64, 0.0));
    classes.push(Check::holds("disc approximant C gives S1-invariant D_C K", s1_all));

    Ok(vec![volume, widths, dims, fixed, classes])
}

fn harmonic_suite(seed: u64) -> Result<Vec<Report>> {
    let mut jacobi = Report::new("harmonic: orthogonal polynomials and harmonicity");
    let (x, w) = gauss_legendre(32);
    let mut worst: f64 = 0.0;
    for a in 0..=4u32 {
        for b in 0..=4u32 {
            let qs = (0..=6).map(|d| build_ortho_q(a, b, d)).collect::<Result<Vec<_>>>()?;
            for i in 0..qs.len() {
                worst = worst.max((qs[i].eval(1.0) - 1.0).abs());
                for j in 0..i {
                    let ip: f64 = x
                        .iter()
                        .zip(&w)
                        .map(|(xi, wi)| {
                            let t = 0.5 * (xi + 1.0);
                            0.5 * wi * qs[i].eval(t) * qs[j].eval(t) * t.powi(a as i32) * (1.0 - t).powi(b as i32)
                        })
                        .sum();
                    worst = worst.max(ip.abs());
                }
            }
        }
    }
    jacobi.push(Check::at_most("Q orthogonality and Q(1) = 1 up to degree 6", worst, 0.0, 1e-10));
    let mut harm: f64 = 0.0;
    for k in 0..=4 {
        for l in 0..=4 {
            harm = harm.max(harmonicity_check(k, l, 1e-4, seed.wrapping_add((5 * k + l) as u64))?);
        }
    }
    jacobi.push(Check::at_most("finite-difference Laplacian of P_{k,l} extensions", harm, 0.0, 1e-3));

    let mut eigen = Report::new("harmonic: multipliers");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xe1);
    let mut worst_eig: f64 = 0.0;
    let mut worst_table: f64 = 0.0;
    for i in 0..20 {
        let c = random_polygon(&mut rng, 7);
        for k in 0..=6 {
            for l in 0..=6 {
                worst_eig = worst_eig.max(eigenfunction_check(&c, k, l, 50, seed.wrapping_add(i))?);
            }
        }
        let table = multiplier_table(&c, 6);
        let hc = fourier_support(&c.clone().into(), 6, Convention::Multiplier)?;
        for e in table.entries() {
            let j = e.k as i64 - e.l as i64;
            let want = hc.get(j) * (1.0 - (j * j) as f64);
            worst_table = worst_table.max((Complex::new(e.re, e.im) - want).norm());
        }
    }
    eigen.push(Check::at_most("A_C P_{k,l}((., e)) = lambda_{k,l} P_{k,l}((., e)), k, l <= 6", worst_eig, 0.0, 1e-10));
    eigen.push(Check::at_most("lambda_{k,l} = (1 - (k-l)^2) c_{k-l}(h_C)", worst_table, 0.0, 1e-9));

    let mut quad_r = Report::new("harmonic: quadrature and kernels");
    let quad = S3Quadrature::standard();
    let mass = quad.integrate(|_| Complex::new(1.0, 0.0)).re;
    quad_r.push(Check::equal("sphere mass 2 pi^2", mass, 2.0 * PI * PI, 1e-10));
    let small = s3_quadrature(16, 16, 16)?;
    let polys: Vec<DiskPolynomial> = (0..=6)
        .flat_map(|deg| (0..=deg).map(move |k| (k, deg - k)))
        .map(|(k, l)| DiskPolynomial::m2(k, l))
        .collect::<Result<_>>()?;
    let mut worst_orth: f64 = 0.0;
    for (i, p) in polys.iter().enumerate() {
        for q in &polys[..i] {
            let ip = small.integrate(|v| p.eval(pole_coordinate(v)) * q.eval(pole_coordinate(v)).conj());
            worst_orth = worst_orth.max(ip.norm());
        }
    }
    quad_r.push(Check::at_most("P_{k,l} orthogonality, k + l <= 6", worst_orth, 0.0, 1e-8));

    let k = random_polytope(&mut rng)?;
    let c = Polygon2::unit_square();
    let d = dc_polytope(&c, &k.clone().into());
    let hk = quad.sample(|v| crate::complexspace::Support::support(&k, v));
    let hd = quad.sample(|v| crate::complexspace::Support::support(&d, v));
    let table = multiplier_table(&c, 4);
    let (mut num, mut den, mut steiner) = (0.0f64, 0.0f64, 0.0f64);
    for u in direction_net(4, 10, seed) {
        for deg in 0..=4 {
            for kk in 0..=deg {
                let ll = deg - kk;
                let gk = kernel_component_sampled(&hk, kk, ll, &u, &quad)?;
                let gd = kernel_component_sampled(&hd, kk, ll, &u, &quad)?;
                let lam = table.get(kk, ll).unwrap_or_default();
                num = num.max((gd - lam * gk).norm());
                den = den.max(gd.norm());
                if deg == 1 {
                    steiner = steiner.max(gd.norm());
                }
            }
        }
    }
    quad_r.push(Check::at_most("G_{k,l}[h_D] = lambda_{k,l} G_{k,l}[h_K], k + l <= 4", num / den, 0.0, 1e-6));
    quad_r.push(Check::at_most("Steiner components G_{1,0}, G_{0,1} of h_D vanish", steiner, 0.0, 1e-8));

    Ok(vec![jacobi, eigen, quad_r])
}

/// Hull of 12 random points of the ball of radius 1.5 in `ℝ⁴`.
pub(crate) fn random_polytope<R: rand::Rng>(rng: &mut R) -> Result<PolytopeCm> {
    let pts = (0..12)
        .map(|_| random_unit(rng, 4).into_iter().map(|x| x * rng.random_range(0.5..1.5)).collect())
        .collect();
    PolytopeCm::new(2, pts)
}
