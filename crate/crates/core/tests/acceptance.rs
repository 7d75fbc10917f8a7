//! Acceptance criteria 1–10. Each test prints one PASS/FAIL line per checked
//! claim and then a summary line for the criterion.

mod common;

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

use k3lattice::clifford::{
    find_polarization_element, left_mul_matrix, phi_a, phi_gram, trace_pairing_identity,
    CliffordElement, Projector,
};
use k3lattice::embeddings::{embed_ld_in_l, four_squares, ld_complement_embedding, v_d_in_k3};
use k3lattice::enumeration::enumerate_lattices;
use k3lattice::lattice::{
    big_l, check_disc_complement, direct_sum, direct_sum_all, discriminant_group, e8,
    eichler_transvection, hyperbolic_u, in_discriminant_kernel, is_primitive, k3_lattice, l_d,
    negate, rank_one, reflection, Isometry, Lattice,
};
use k3lattice::linalg::{det_exact, int_vec, IntMatrix};
use k3lattice::roots::{
    min_polarization_degree, short_vectors, short_vectors_up_to, verify_certificate,
};
use k3lattice::Parallelism;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;

const SEED: u64 = 0x6b33_6c61;

struct Criterion {
    id: u8,
    failures: Vec<String>,
    start: Instant,
    limit: Option<Duration>,
}

impl Criterion {
    fn new(id: u8, limit: Option<Duration>) -> Self {
        Criterion {
            id,
            failures: Vec::new(),
            start: Instant::now(),
            limit,
        }
    }

    fn check(&mut self, claim: &str, ok: bool, detail: impl std::fmt::Display) {
        let tag = if ok { "PASS" } else { "FAIL" };
        println!("[criterion {:>2}] {tag} {claim} ({detail})", self.id);
        if !ok {
            self.failures.push(claim.to_string());
        }
    }

    fn finish(mut self) {
        let elapsed = self.start.elapsed();
        if let Some(limit) = self.limit {
            let ok = elapsed <= limit;
            self.check(
                &format!("runtime within {limit:?}"),
                ok,
                format!("{elapsed:.2?}"),
            );
        }
        let tag = if self.failures.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        println!("[criterion {:>2}] {tag} overall", self.id);
        assert!(
            self.failures.is_empty(),
            "criterion {} failed: {:?}",
            self.id,
            self.failures
        );
    }
}

fn sig(l: &Lattice) -> (usize, usize, usize) {
    l.signature().as_tuple()
}

#[test]
fn criterion_01_standard_lattices() {
    let mut c = Criterion::new(1, Some(Duration::from_secs(10)));
    let k3 = k3_lattice();
    c.check(
        "K3 lattice is unimodular",
        k3.is_unimodular(),
        format!("det {}", k3.det()),
    );
    c.check(
        "K3 lattice has signature (19,3)",
        sig(&k3) == (19, 3, 0),
        format!("{:?}", sig(&k3)),
    );

    let l = big_l();
    c.check(
        "L is unimodular",
        l.is_unimodular(),
        format!("det {}", l.det()),
    );
    c.check(
        "L has signature (21,4)",
        sig(&l) == (21, 4, 0),
        format!("{:?}", sig(&l)),
    );

    let mut bad = Vec::new();
    for d in 1..=20 {
        let ld = l_d(d).unwrap();
        let disc = discriminant_group(&ld).unwrap();
        let ok = sig(&ld) == (19, 2, 0) && disc.is_cyclic() && disc.order() == BigInt::from(2 * d);
        if !ok {
            bad.push(d);
        }
    }
    c.check(
        "L_d has signature (19,2) and cyclic discriminant of order 2d, d in 1..20",
        bad.is_empty(),
        format!("failing d: {bad:?}"),
    );
    c.finish();
}

#[test]
fn criterion_02_primitive_embeddings() {
    let mut c = Criterion::new(2, Some(Duration::from_secs(60)));
    let mut bad = Vec::new();
    for d in 1..=50 {
        let e = embed_ld_in_l(d).unwrap();
        let metric = e.matrix().congruence(e.target().gram()).unwrap() == *e.source().gram();
        let comp = ld_complement_embedding(d).unwrap();
        let triple = check_disc_complement(&e, &comp).unwrap().as_triple();
        let two_d = BigInt::from(2 * d);
        if !(metric && is_primitive(&e) && triple == (two_d.clone(), two_d.clone(), two_d)) {
            bad.push(d);
        }
    }
    c.check(
        "i_d metric, primitive, disc triple (2d,2d,2d), d in 1..50",
        bad.is_empty(),
        format!("failing d: {bad:?}"),
    );
    c.finish();
}

#[test]
fn criterion_03_four_squares() {
    let mut c = Criterion::new(3, Some(Duration::from_secs(60)));
    let bad: Vec<u64> = (0..=100_000u64)
        .filter(|&m| !four_squares(m).is_valid())
        .collect();
    c.check(
        "four_squares valid for all m <= 10^5",
        bad.is_empty(),
        format!("{} failures", bad.len()),
    );
    c.finish();
}

#[test]
fn criterion_04_vd_complement() {
    let mut c = Criterion::new(4, None);
    let k3 = k3_lattice();
    let mut bad = Vec::new();
    for d in 1..=50i64 {
        let data = v_d_in_k3(d).unwrap();
        let ld = l_d(d).unwrap();
        let t = data.isometry.matrix();
        let gram_ok = t.congruence(ld.gram()).unwrap() == *data.complement.source().gram();
        let unimodular = det_exact(t).unwrap().abs().is_one();
        let norm_ok = k3.norm(&data.vector) == BigInt::from(-2 * d);
        if !(gram_ok && unimodular && norm_ok) {
            bad.push(d);
        }
    }
    c.check(
        "v_d^perp isometric to L_d via explicit unimodular matrix, d in 1..50",
        bad.is_empty(),
        format!("failing d: {bad:?}"),
    );
    c.finish();
}

fn as_i64(v: &[BigInt]) -> Vec<i64> {
    v.iter().map(|x| x.to_i64().unwrap()).collect()
}

#[test]
fn criterion_05_short_vectors() {
    let mut c = Criterion::new(5, Some(Duration::from_secs(30)));
    let e = e8();
    let report = short_vectors(&e, &BigInt::from(2), Parallelism::Parallel).unwrap();
    c.check(
        "E8 has exactly 240 roots",
        report.vectors.len() == 240,
        report.vectors.len(),
    );

    let oracle: BTreeSet<Vec<i64>> = short_vectors_oracle(e.gram(), 2)
        .into_iter()
        .map(|(_, v)| v)
        .collect();
    let ours: BTreeSet<Vec<i64>> = report.vectors.iter().map(|v| as_i64(v)).collect();
    c.check(
        "E8 roots match the box oracle",
        ours == oracle,
        format!("oracle {}", oracle.len()),
    );

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut mismatches = 0;
    for _ in 0..50 {
        let rank = rng.random_range(1..=4);
        let g = random_positive_definite(&mut rng, rank);
        let n = rng.random_range(1..=12);
        let lat = Lattice::new(g.clone()).unwrap();
        let ours: BTreeSet<(i64, Vec<i64>)> =
            short_vectors_up_to(&lat, &BigInt::from(n), Parallelism::Sequential)
                .unwrap()
                .into_iter()
                .map(|(q, v)| (q.to_i64().unwrap(), as_i64(&v)))
                .collect();
        if ours != short_vectors_oracle(&g, n) {
            mismatches += 1;
        }
    }
    c.check(
        "50 random lattices agree with the oracle",
        mismatches == 0,
        format!("{mismatches} mismatches"),
    );
    c.finish();
}

#[test]
fn criterion_06_polarization_degree() {
    let mut c = Criterion::new(6, None);
    let mut bad = Vec::new();
    for d in 1..=20i64 {
        let n = rank_one(2 * d);
        let r = min_polarization_degree(&n, 2 * d, 1, Parallelism::Sequential).unwrap();
        if r.upper_bound != Some(BigInt::from(2 * d)) || !r.exhaustive {
            bad.push(d);
        }
    }
    c.check(
        "<2d> has degree 2d exhaustively, d <= 20",
        bad.is_empty(),
        format!("failing d: {bad:?}"),
    );

    let cases = [
        ("U", hyperbolic_u(), 4i64, int_vec(&[1, 2])),
        (
            "<2>+<-2>",
            direct_sum(&rank_one(2), &rank_one(-2)),
            6,
            int_vec(&[2, 1]),
        ),
    ];
    for (name, n, deg, cert) in cases {
        let r = min_polarization_degree(&n, 20, 10, Parallelism::Parallel).unwrap();
        c.check(
            &format!("{name}: degree {deg}, certificate {cert:?}"),
            r.upper_bound == Some(BigInt::from(deg)) && r.certificate.as_ref() == Some(&cert),
            format!("{:?} {:?}", r.upper_bound, r.certificate),
        );
        c.check(
            &format!("{name}: certificate revalidated"),
            verify_certificate(&n, &cert, &BigInt::from(deg)),
            "verify_certificate",
        );
        let oracle = min_degree_oracle(n.gram(), 20, 10);
        c.check(
            &format!("{name}: box oracle agrees"),
            oracle.as_ref().map(|o| o.0) == Some(deg),
            format!("{oracle:?}"),
        );
    }
    c.finish();
}

fn random_element(rng: &mut ChaCha8Rng, host: &Arc<Lattice>, terms: usize) -> CliffordElement {
    let dim = 1u64 << host.rank();
    CliffordElement::from_terms(
        host,
        (0..terms).map(|_| {
            (
                rng.random_range(0..dim),
                BigInt::from(rng.random_range(-3..=3)),
            )
        }),
    )
    .unwrap()
}

fn clifford_hosts() -> Vec<Arc<Lattice>> {
    let one = rank_one(1);
    vec![
        Arc::new(direct_sum(&one, &one)),
        Arc::new(hyperbolic_u()),
        Arc::new(Lattice::from_i64(&[[2, -1, 0], [-1, 2, -1], [0, -1, 2]]).unwrap()),
        Arc::new(direct_sum(&hyperbolic_u(), &rank_one(-2))),
        Arc::new(direct_sum_all([&one, &one, &one, &one, &one])),
        Arc::new(direct_sum_all([
            &hyperbolic_u(),
            &hyperbolic_u(),
            &rank_one(2),
            &rank_one(3),
        ])),
    ]
}

#[test]
fn criterion_07_clifford() {
    let mut c = Criterion::new(7, Some(Duration::from_secs(120)));
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 7);
    let hosts = clifford_hosts();

    let (mut assoc, mut anti, mut even) = (0, 0, 0);
    for h in &hosts {
        for _ in 0..20 {
            let x = random_element(&mut rng, h, 4);
            let y = random_element(&mut rng, h, 4);
            let z = random_element(&mut rng, h, 4);
            if x.mul(&y).unwrap().mul(&z).unwrap() != x.mul(&y.mul(&z).unwrap()).unwrap() {
                assoc += 1;
            }
            let xy = x.mul(&y).unwrap();
            if xy.reversal() != y.reversal().mul(&x.reversal()).unwrap()
                || x.reversal().reversal() != x
            {
                anti += 1;
            }
            if !x.even_part().mul(&y.even_part()).unwrap().is_even() {
                even += 1;
            }
        }
    }
    c.check(
        "associativity on ranks 2..6",
        assoc == 0,
        format!("{assoc} failures"),
    );
    c.check(
        "reversal is an anti-involution",
        anti == 0,
        format!("{anti} failures"),
    );
    c.check(
        "even part closed under products",
        even == 0,
        format!("{even} failures"),
    );

    let mut trace_bad = 0;
    for i in 0..200 {
        let h = &hosts[i % hosts.len()];
        let v = random_vec(&mut rng, h.rank(), 4);
        let w = random_vec(&mut rng, h.rank(), 4);
        match trace_pairing_identity(&v, &w, h) {
            Ok((l, r)) if l == r => {}
            _ => trace_bad += 1,
        }
    }
    c.check(
        "Tr(L_v L_w) = 2^n b(v,w) on 200 pairs",
        trace_bad == 0,
        format!("{trace_bad} failures"),
    );

    for (name, h) in [("<1>^2", &hosts[0]), ("U", &hosts[1])] {
        let a = find_polarization_element(h, Parallelism::Parallel).unwrap();
        let g = phi_gram(&a, Parallelism::Parallel).unwrap();
        let antisym = g.add(&g.transpose()).unwrap().is_zero();
        let det = det_exact(&g).unwrap();
        c.check(
            &format!("C({name}): phi_a Gram antisymmetric"),
            antisym,
            format!("a = {:?}", a.terms().collect::<Vec<_>>()),
        );
        c.check(
            &format!("C({name}): phi_a nondegenerate"),
            !det.is_zero(),
            format!("det {det}"),
        );
        let mut diag_bad = 0;
        for _ in 0..200 {
            let x = random_element(&mut rng, h, 3);
            if !phi_a(&x, &x, &a).unwrap().is_zero() {
                diag_bad += 1;
            }
        }
        c.check(
            &format!("C({name}): phi_a(x,x) = 0 on 200 x"),
            diag_bad == 0,
            format!("{diag_bad} failures"),
        );
    }
    c.finish();
}

#[test]
fn criterion_08_projector() {
    let mut c = Criterion::new(8, None);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 8);
    let one = rank_one(1);
    let hosts: Vec<Arc<Lattice>> = vec![
        Arc::new(direct_sum_all([&one, &one, &one, &one, &one])),
        Arc::new(direct_sum(&hyperbolic_u(), &hyperbolic_u())),
        Arc::new(direct_sum_all([&hyperbolic_u(), &one, &negate(&one)])),
        Arc::new(Lattice::from_i64(&[[2, 1, 0], [1, 1, 0], [0, 0, -1]]).unwrap()),
    ];
    let projectors: Vec<Projector> = hosts.iter().map(|h| Projector::new(h).unwrap()).collect();
    let mut bad = 0;
    for i in 0..100 {
        let p = &projectors[i % projectors.len()];
        let h = p.host();
        let v = random_vec(&mut rng, h.rank(), 9);
        let f = left_mul_matrix(&CliffordElement::vector(h, &v).unwrap()).unwrap();
        match p.project(&f) {
            Ok(back) if back == v => {}
            _ => bad += 1,
        }
    }
    c.check(
        "project(left_mul(v)) = v with exact division, 100 samples",
        bad == 0,
        format!("{bad} failures"),
    );
    c.finish();
}

/// Binary forms by direct reduction of every matrix in a box.
fn binary_oracle(max_disc: i64) -> Vec<(i64, i64, i64)> {
    let mut set = BTreeSet::new();
    for a in 1..=2 * max_disc {
        for cc in 1..=2 * max_disc {
            for b in -max_disc..=max_disc {
                let d = a * cc - b * b;
                if d <= 0 || d > max_disc {
                    continue;
                }
                let (mut a, mut b, mut cc) = (a, b, cc);
                loop {
                    if cc < a {
                        std::mem::swap(&mut a, &mut cc);
                    }
                    let k = (2 * b + a).div_euclid(2 * a);
                    if k == 0 {
                        break;
                    }
                    cc = cc - 2 * k * b + k * k * a;
                    b -= k * a;
                }
                if 2 * b.abs() > a {
                    b -= b.signum() * a;
                }
                set.insert((a, b.abs(), cc));
            }
        }
    }
    let mut v: Vec<_> = set.into_iter().collect();
    v.sort_by_key(|&(a, b, cc)| (a * cc - b * b, a, b, cc));
    v
}

#[test]
fn criterion_09_enumeration() {
    let mut c = Criterion::new(9, None);
    let mut bad = Vec::new();
    let mut counts = Vec::new();
    for d in 1..=20u64 {
        let l = enumerate_lattices(2, d, false, Parallelism::Parallel).unwrap();
        let ours: Vec<(i64, i64, i64)> = l
            .forms
            .iter()
            .map(|f| {
                (
                    f[(0, 0)].to_i64().unwrap(),
                    f[(0, 1)].to_i64().unwrap(),
                    f[(1, 1)].to_i64().unwrap(),
                )
            })
            .collect();
        if ours != binary_oracle(d as i64) {
            bad.push(d);
        }
        counts.push(l.len());
    }
    c.check(
        "rank 2 matches brute force, D <= 20",
        bad.is_empty(),
        format!("failing D: {bad:?}"),
    );
    c.check(
        "counts monotone in D",
        counts.windows(2).all(|w| w[0] <= w[1]),
        format!("{counts:?}"),
    );
    c.finish();
}

#[test]
fn criterion_10_discriminant_kernel() {
    let mut c = Criterion::new(10, None);
    let mut isos: Vec<Isometry> = Vec::new();
    let e = e8();
    for i in 0..8 {
        let mut w = vec![BigInt::zero(); 8];
        w[i] = BigInt::one();
        isos.push(reflection(&w, &e).unwrap());
    }
    isos.push(Isometry::minus_identity(&e));
    let u = hyperbolic_u();
    isos.push(Isometry::new(u.clone(), IntMatrix::from_i64(&[[0, 1], [1, 0]])).unwrap());
    isos.push(reflection(&int_vec(&[1, -1]), &u).unwrap());
    let uu = direct_sum(&u, &u);
    isos.push(eichler_transvection(&int_vec(&[1, 0, 0, 0]), &int_vec(&[0, 0, 1, 3]), &uu).unwrap());
    let k3 = k3_lattice();
    let mut r = vec![BigInt::zero(); 22];
    r[16] = BigInt::one();
    r[17] = BigInt::from(-1);
    isos.push(reflection(&r, &k3).unwrap());
    let big = big_l();
    let mut r = vec![BigInt::zero(); 25];
    r[20] = BigInt::one();
    isos.push(reflection(&r, &big).unwrap());

    let failing: Vec<usize> = isos
        .iter()
        .enumerate()
        .filter(|(_, g)| !in_discriminant_kernel(g).unwrap())
        .map(|(i, _)| i)
        .collect();
    c.check(
        &format!(
            "{} isometries of unimodular lattices act trivially",
            isos.len()
        ),
        failing.is_empty(),
        format!("failing: {failing:?}"),
    );

    let n = direct_sum(&rank_one(4), &u);
    let g = Isometry::new(n, IntMatrix::from_i64(&[[-1, 0, 0], [0, 1, 0], [0, 0, 1]])).unwrap();
    let inside = in_discriminant_kernel(&g).unwrap();
    c.check(
        "-1 on <4> in <4>+U is outside the kernel",
        !inside,
        format!("in kernel: {inside}"),
    );
    c.finish();
}
