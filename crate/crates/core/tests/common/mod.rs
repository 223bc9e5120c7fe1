#![allow(dead_code)]

use num::integer::gcd;
use num::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use sepinv_core::binary::{effective_threshold, BinaryForm, MultiplicityProfile};
use sepinv_core::poly::rat;

/// `a x + b y` up to scaling, normalized so that gcd(a, b) = 1 and the
/// first non-zero entry is positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Line {
    pub a: i64,
    pub b: i64,
}

impl Line {
    pub fn new(a: i64, b: i64) -> Self {
        assert!(a != 0 || b != 0);
        let g = gcd(a, b);
        let (mut a, mut b) = (a / g, b / g);
        if a < 0 || (a == 0 && b < 0) {
            a = -a;
            b = -b;
        }
        Line { a, b }
    }

    pub fn form(&self) -> BinaryForm {
        BinaryForm::linear(rat(self.a), rat(self.b))
    }

    pub fn is_y(&self) -> bool {
        self.a == 0
    }
}

/// `c * prod l_i^(k_i)` with the factorization kept alongside.
#[derive(Clone, Debug)]
pub struct FactoredForm {
    pub scalar: BigRational,
    pub factors: Vec<(Line, usize)>,
    pub form: BinaryForm,
}

impl FactoredForm {
    pub fn build(scalar: BigRational, factors: Vec<(Line, usize)>) -> Self {
        let mut form = BinaryForm::from_ints(&[1]);
        for (l, k) in &factors {
            form = form.mul(&l.form().pow(*k));
        }
        let form = form.scale(&scalar);
        FactoredForm { scalar, factors, form }
    }

    pub fn degree(&self) -> usize {
        self.factors.iter().map(|f| f.1).sum()
    }

    pub fn mult(&self, l: Line) -> usize {
        self.factors.iter().find(|f| f.0 == l).map_or(0, |f| f.1)
    }

    pub fn expected_profile(&self) -> MultiplicityProfile {
        let infinity_mult = self.factors.iter().filter(|f| f.0.is_y()).map(|f| f.1).sum();
        let mut finite: Vec<(usize, usize)> = Vec::new();
        for (l, k) in &self.factors {
            if l.is_y() {
                continue;
            }
            match finite.iter_mut().find(|(e, _)| e == k) {
                Some(slot) => slot.1 += 1,
                None => finite.push((*k, 1)),
            }
        }
        finite.sort();
        MultiplicityProfile { degree: self.degree(), infinity_mult, finite }
    }

    pub fn expected_has_root(&self, t: &BigRational) -> bool {
        let k = effective_threshold(t);
        self.factors.iter().any(|f| f.1 >= k)
    }
}

pub fn line_pool() -> Vec<Line> {
    let mut pool: Vec<Line> = Vec::new();
    for a in -3i64..=3 {
        for b in -3i64..=3 {
            if a == 0 && b == 0 {
                continue;
            }
            let l = Line::new(a, b);
            if !pool.contains(&l) {
                pool.push(l);
            }
        }
    }
    pool
}

pub fn random_scalar(rng: &mut ChaCha8Rng) -> BigRational {
    let p = [1i64, -1, 2, -3, 5][rng.gen_range(0..5)];
    let q = [1i64, 2, 3][rng.gen_range(0..3)];
    BigRational::new(p.into(), q.into())
}

/// Splits `d` into random positive exponents on distinct lines drawn from `lines`.
pub fn random_factored(rng: &mut ChaCha8Rng, d: usize, lines: &[Line]) -> FactoredForm {
    let mut chosen: Vec<Line> = lines.to_vec();
    chosen.shuffle(rng);
    let mut factors: Vec<(Line, usize)> = Vec::new();
    let mut left = d;
    for l in chosen {
        if left == 0 {
            break;
        }
        let k = if factors.len() + 1 == lines.len() { left } else { rng.gen_range(1..=left) };
        factors.push((l, k));
        left -= k;
    }
    assert_eq!(left, 0, "line pool too small for degree {d}");
    FactoredForm::build(random_scalar(rng), factors)
}

/// Compares the gcd-based predicates with the factorization on `count`
/// seeded forms of degree 2..=10. Returns `(checks, mismatches)`.
pub fn binary_oracle_run(seed: u64, count: usize) -> (usize, Vec<String>) {
    use rand::SeedableRng;
    use sepinv_core::binary::{
        common_root_mult_ge, half_degree, has_root_mult_ge, limit_along_torus, multiplicity_profile, Limit,
    };

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool = line_pool();
    let mut checks = 0;
    let mut bad = Vec::new();
    for i in 0..count {
        let d = rng.gen_range(2..=10);
        // a narrow pool makes shared and repeated roots common
        let width = rng.gen_range(2..=6);
        let mut lines = pool.clone();
        lines.shuffle(&mut rng);
        let lines = &lines[..width];
        let f = random_factored(&mut rng, d, lines);

        checks += 1;
        let got = multiplicity_profile(&f.form).unwrap();
        if got != f.expected_profile() || got.total() != d {
            bad.push(format!("form {i}: profile {got:?} != {:?}", f.expected_profile()));
        }

        for t in [rat(1), half_degree(d), rat(2), rat(3), half_degree(d + 2)] {
            checks += 1;
            if has_root_mult_ge(&f.form, &t).unwrap() != f.expected_has_root(&t) {
                bad.push(format!("form {i}: has_root_mult_ge({t}) disagrees"));
            }
        }

        let others: Vec<FactoredForm> =
            (0..rng.gen_range(1..=2)).map(|_| random_factored(&mut rng, d, lines)).collect();
        let mut tuple = vec![f.form.clone()];
        tuple.extend(others.iter().map(|o| o.form.clone()));
        for t in [rat(1), half_degree(d), rat(2)] {
            let k = effective_threshold(&t);
            let expected = f.factors.iter().any(|&(l, e)| e >= k && others.iter().all(|o| o.mult(l) >= k));
            checks += 1;
            if common_root_mult_ge(&tuple, &t).unwrap() != expected {
                bad.push(format!("form {i}: common_root_mult_ge({t}) disagrees"));
            }
        }

        let l = *pool.choose(&mut rng).unwrap();
        let m = loop {
            let m = *pool.choose(&mut rng).unwrap();
            if m != l {
                break m;
            }
        };
        let mult = f.mult(l);
        checks += 1;
        match (limit_along_torus(&f.form, &l.form(), &m.form()).unwrap(), 2 * mult) {
            (Limit::Zero, twice) if twice > d => {}
            (Limit::Balanced(b), twice) if twice == d => {
                let shape = l.form().mul(&m.form()).pow(d / 2);
                if b.is_zero() || !b.is_proportional(&shape) {
                    bad.push(format!("form {i}: balanced limit {b} is not a multiple of (lm)^(d/2)"));
                }
            }
            (Limit::NoLimit, twice) if twice < d => {}
            (got, _) => bad.push(format!("form {i}: limit {got:?} with mult {mult}, d {d}")),
        }
    }
    (checks, bad)
}
