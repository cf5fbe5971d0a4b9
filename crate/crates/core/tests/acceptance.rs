//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::{BTreeSet, HashMap};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use permkit::cycle_text::{format, parse};
use permkit::ranking::{
    factorial, random_perm, rank_lex, rank_mr, unrank_lex, unrank_mr, RandomSource,
};
use permkit::{Group, Perm, Point};
use rand::Rng;
use statrs::distribution::{ChiSquared, ContinuousCDF};

type Outcome = Result<String, String>;

fn p(text: &str) -> Perm {
    parse(text).unwrap()
}

fn gen(texts: &[&str]) -> Group {
    let perms: Vec<Perm> = texts.iter().map(|t| p(t)).collect();
    Group::generated_by(&perms).unwrap()
}

fn check(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    check(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

fn all_arrays(n: usize) -> Vec<Vec<Point>> {
    fn rec(prefix: &mut Vec<Point>, used: &mut [bool], out: &mut Vec<Vec<Point>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

fn c1_session() -> Outcome {
    let start = Instant::now();
    let (pp, q, r) = (p("(0 1)"), p("(1 2)"), p("(2 3)"));
    check(&pp * &q == p("(0 1 2)"), || "p*q".into())?;
    check(&q * &pp == p("(0 2 1)"), || "q*p".into())?;
    check(pp.commutator(&q) == p("(0 2 1)"), || "commutator".into())?;
    let pqr = &(&pp * &q) * &r;
    check(pqr.power(1234567890) == p("(0 2)(1 3)"), || "power".into())?;
    check(q.to_array(4).unwrap() == vec![0, 2, 1, 3], || "list".into())?;
    check(pp.is_odd() && (&pp * &pp).is_identity(), || "parity/identity".into())?;
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("{:?}", start.elapsed()))
}

fn c2_ranking() -> Outcome {
    let start = Instant::now();
    let q = p("(1 2)");
    check(rank_lex(&q, 4).unwrap() == big(2), || "rank_lex size 4".into())?;
    check(rank_lex(&q, 5).unwrap() == big(6), || "rank_lex size 5".into())?;
    check(unrank_lex(4, &big(20)).unwrap() == p("(0 3 2)"), || "unrank_lex 4".into())?;
    check(unrank_lex(5, &big(20)).unwrap() == p("(1 4 3)"), || "unrank_lex 5".into())?;
    check(rank_mr(&q, 5).unwrap() == big(99), || "rank_mr".into())?;
    check(unrank_mr(5, &big(20)).unwrap() == p("(0 2 1 3 4)"), || "unrank_mr".into())?;
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("{:?}", start.elapsed()))
}

fn c3_exhaustive() -> Outcome {
    let start = Instant::now();
    let mut checked = 0usize;
    for n in 1..=6 {
        let nf = factorial(n).to_u64().unwrap();
        for r in 0..nf {
            let r = big(r);
            let lex = unrank_lex(n, &r).map_err(|e| e.to_string())?;
            check(rank_lex(&lex, n).unwrap() == r, || format!("lex n={n} r={r}"))?;
            let mr = unrank_mr(n, &r).map_err(|e| e.to_string())?;
            check(rank_mr(&mr, n).unwrap() == r, || format!("mr n={n} r={r}"))?;
            checked += 1;
        }
        let mut arrays = all_arrays(n);
        arrays.sort();
        let mut lex_ranks = BTreeSet::new();
        let mut mr_ranks = BTreeSet::new();
        for (idx, a) in arrays.iter().enumerate() {
            let perm = Perm::from_array(a).unwrap();
            let lr = rank_lex(&perm, n).unwrap();
            check(lr == big(idx as u64), || format!("sorted oracle n={n} {a:?}"))?;
            check(unrank_lex(n, &lr).unwrap() == perm, || format!("lex inverse {a:?}"))?;
            let mr = rank_mr(&perm, n).unwrap();
            check(unrank_mr(n, &mr).unwrap() == perm, || format!("mr inverse {a:?}"))?;
            lex_ranks.insert(lr);
            mr_ranks.insert(mr);
        }
        check(lex_ranks.len() as u64 == nf && mr_ranks.len() as u64 == nf, || {
            format!("ranks not a bijection at n={n}")
        })?;
    }
    within(start.elapsed(), Duration::from_secs(30))?;
    Ok(format!("{checked} ranks, {:?}", start.elapsed()))
}

fn c4_tower() -> Outcome {
    let start = Instant::now();
    let s4 = gen(&["(0 1)", "(0 1 2 3)"]);
    check(s4.order() == 24, || format!("|S4| = {}", s4.order()))?;
    let a4 = s4.commutator_subgroup(&s4).unwrap();
    check(a4.order() == 12, || format!("|A4| = {}", a4.order()))?;
    check(a4.iter().all(Perm::is_even), || "A4 has an odd element".into())?;
    check(a4.is_normal(&s4), || "A4 not normal".into())?;
    let v4 = a4.commutator_subgroup(&a4).unwrap();
    check(v4.order() == 4, || format!("|V4| = {}", v4.order()))?;
    check(v4.is_abelian(), || "V4 not abelian".into())?;
    check(v4.is_normal(&a4), || "V4 not normal in A4".into())?;
    let one = v4.commutator_subgroup(&v4).unwrap();
    check(one.is_trivial() && one.is_normal(&v4), || "series does not end at 1".into())?;
    let orders: Vec<usize> = s4.derived_series().unwrap().iter().map(Group::order).collect();
    check(orders == vec![24, 12, 4, 1], || format!("series {orders:?}"))?;
    within(start.elapsed(), Duration::from_secs(5))?;
    Ok(format!("orders {orders:?}, {:?}", start.elapsed()))
}

fn d4() -> Group {
    gen(&["(0 2)(3 5)(6 8)", "(0 6)(1 7)(2 8)", "(1 3)(2 6)(5 7)"])
}

fn c5_square() -> Outcome {
    let start = Instant::now();
    let g8 = d4();
    check(g8.order() == 8, || format!("|D4| = {}", g8.order()))?;
    let pts: Vec<Point> = (0..9).collect();
    let orbits: BTreeSet<BTreeSet<Point>> =
        g8.orbits(&pts).iter().map(|o| o.points().clone()).collect();
    let expected: BTreeSet<BTreeSet<Point>> = [vec![0, 2, 6, 8], vec![1, 3, 5, 7], vec![4]]
        .into_iter()
        .map(|v| v.into_iter().collect())
        .collect();
    check(orbits == expected, || format!("orbits {orbits:?}"))?;
    let z = g8.center();
    check(z.order() == 2, || format!("|Z| = {}", z.order()))?;
    check(z.contains(&p("(0 8)(1 7)(2 6)(3 5)")), || "half-turn missing".into())?;
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("{:?}", start.elapsed()))
}

fn c6_orbit_stabilizer() -> Outcome {
    let cases = [(d4(), 9usize), (gen(&["(0 1)", "(0 1 2 3)"]), 4)];
    let mut checked = 0;
    for (g, n) in &cases {
        for x in 0..*n {
            let lhs = g.orbit(x).len() * g.stabilizer(x).order();
            check(lhs == g.order(), || format!("point {x}: {lhs} != {}", g.order()))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} points"))
}

fn naive_power(q: &Perm, m: u32) -> Perm {
    (0..m).fold(Perm::identity(), |acc, _| acc.compose(q))
}

fn c7_properties() -> Outcome {
    const CASES: usize = 1000;
    let mut rng = RandomSource::seeded(0x5eed_0007);
    for case in 0..CASES {
        let draw = |rng: &mut RandomSource| {
            let n = rng.random_range(1..=16);
            random_perm(n, rng)
        };
        let (a, b, c) = (draw(&mut rng), draw(&mut rng), draw(&mut rng));
        let e = Perm::identity();
        let ctx = || format!("case {case}: {a} {b} {c}");
        check((&a * &b) * c.clone() == &a * &(&b * &c), ctx)?;
        check(&e * &a == a && &a * &e == a, ctx)?;
        check((&a * &a.inverse()).is_identity() && (&a.inverse() * &a).is_identity(), ctx)?;
        check((&a * &b).parity() == (a.parity() + b.parity()) % 2, ctx)?;
        let order = a.order().to_i64().unwrap();
        check(a.power(order).is_identity(), ctx)?;
        check(
            (1..order).all(|m| !a.power(m).is_identity()),
            || format!("{}: order not minimal", ctx()),
        )?;
        let m = rng.random_range(0..=64u32);
        check(a.power(m as i64) == naive_power(&a, m), || format!("{}: power {m}", ctx()))?;
        check(parse(&format(&a)).unwrap() == a, ctx)?;
    }
    Ok(format!("{CASES} cases"))
}

fn c8_subgroup_laws() -> Outcome {
    let start = Instant::now();
    let s4 = gen(&["(0 1)", "(0 1 2 3)"]);
    let a4 = s4.subgroup_search(Perm::is_even);
    let v4 = gen(&["(0 1)(2 3)", "(0 2)(1 3)"]);
    let groups = [
        ("trivial", Group::trivial()),
        ("V4", v4),
        ("A4", a4),
        ("S4", s4),
        ("D4", d4()),
        ("C6", gen(&["(0 1 2 3 4 5)"])),
    ];
    let mut checked = 0;
    for (gname, g) in &groups {
        for (hname, h) in &groups {
            let c = g.centralizer(h);
            let n = g.normalizer(h);
            check(c.is_subgroup(&n), || format!("C_{gname}({hname}) not in N"))?;
            check(c.is_normal(&n), || format!("C_{gname}({hname}) not normal in N"))?;
            checked += 1;
        }
        check(g.center().is_normal(g), || format!("Z({gname}) not normal"))?;
        let derived = g.commutator_subgroup(g).unwrap();
        check(g.is_abelian() == derived.is_trivial(), || format!("{gname}: abelian vs [G,G]"))?;
        if g.is_abelian() {
            check(g.center() == *g, || format!("{gname}: Z(G) != G"))?;
        }
    }
    within(start.elapsed(), Duration::from_secs(10))?;
    Ok(format!("{checked} pairs, {:?}", start.elapsed()))
}

fn median_time<F: FnMut()>(runs: usize, mut f: F) -> Duration {
    f();
    let mut times: Vec<Duration> = (0..runs)
        .map(|_| {
            let t = Instant::now();
            f();
            t.elapsed()
        })
        .collect();
    times.sort();
    times[runs / 2]
}

fn c9_scaling() -> Outcome {
    let start = Instant::now();
    let mut rng = RandomSource::seeded(9);
    let perms: HashMap<usize, Perm> =
        [1000, 2000, 4000].into_iter().map(|n| (n, random_perm(n, &mut rng))).collect();
    let mr = |n: usize| {
        let q = &perms[&n];
        median_time(31, || {
            std::hint::black_box(rank_mr(q, n).unwrap());
        })
    };
    let lex = |n: usize| {
        let q = &perms[&n];
        median_time(11, || {
            std::hint::black_box(rank_lex(q, n).unwrap());
        })
    };
    let (mr2, mr4) = (mr(2000), mr(4000));
    let (lex1, lex2) = (lex(1000), lex(2000));
    let mr_ratio = mr4.as_secs_f64() / mr2.as_secs_f64();
    let lex_ratio = lex2.as_secs_f64() / lex1.as_secs_f64();
    let summary = format!("mr 4000/2000 = {mr_ratio:.2}, lex 2000/1000 = {lex_ratio:.2}");
    check(mr_ratio <= 3.0, || summary.clone())?;
    check(lex_ratio >= 3.0, || summary.clone())?;
    within(start.elapsed(), Duration::from_secs(60))?;
    Ok(summary)
}

fn c10_uniformity() -> Outcome {
    const SIZE: usize = 6;
    const CELLS: usize = 720;
    const DRAWS: usize = 720_000;
    let start = Instant::now();
    let mut rng = RandomSource::seeded(10);
    let mut counts = vec![0u64; CELLS];
    for _ in 0..DRAWS {
        let q = random_perm(SIZE, &mut rng);
        counts[rank_lex(&q, SIZE).unwrap().to_usize().unwrap()] += 1;
    }
    let expected = (DRAWS / CELLS) as f64;
    let chi2: f64 = counts.iter().map(|&c| (c as f64 - expected).powi(2) / expected).sum();
    let critical = ChiSquared::new((CELLS - 1) as f64).unwrap().inverse_cdf(0.999);
    let sigma = (expected * (1.0 - 1.0 / CELLS as f64)).sqrt();
    let worst = counts.iter().map(|&c| (c as f64 - expected).abs() / sigma).fold(0.0, f64::max);
    let summary = format!("chi2 = {chi2:.1}, critical = {critical:.1}, worst cell {worst:.2} sigma");
    check(chi2 < critical, || summary.clone())?;
    check(worst < 5.0, || summary.clone())?;
    within(start.elapsed(), Duration::from_secs(30))?;
    Ok(summary)
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("1 session values", c1_session),
        ("2 ranking values", c2_ranking),
        ("3 exhaustive rank bijections", c3_exhaustive),
        ("4 derived series of S4", c4_tower),
        ("5 square symmetries", c5_square),
        ("6 orbit-stabilizer", c6_orbit_stabilizer),
        ("7 algebraic properties", c7_properties),
        ("8 subgroup structure laws", c8_subgroup_laws),
        ("9 ranking scaling", c9_scaling),
        ("10 random perm uniformity", c10_uniformity),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all criteria passed");
}
