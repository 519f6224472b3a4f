//! End-to-end acceptance gate. Each criterion runs under its own time budget
//! and prints one PASS/FAIL line; the process exits non-zero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use fano_hodge::curves::{
    curve_diamond, jacobian_diamond, projective_space_diamond, sym_curve_diamond,
};
use fano_hodge::fano_even::{euler_closed_form, fano_even_diamond};
use fano_hodge::fano_odd::{cvx_kernel, fano_odd_diamond};
use fano_hodge::motivic::{lemma_k0_oracle, m_polynomial, verify_conjecture_b};
use fano_hodge::stacky::{chu_vandermonde_check, gessel_identity_check, stacky_rhs_length};
use fano_hodge::suites::verify_q_binomial_laws;
use fano_hodge::{
    binomial, gauss_binomial, BigInt, BigUint, EvenFanoParams, HodgeDiamond, LaurentPoly,
    OddFanoParams,
};

type Outcome = Result<(), String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn odd(g: i64, k: i64) -> HodgeDiamond {
    fano_odd_diamond(OddFanoParams::new(g, k).unwrap()).unwrap()
}

fn even(g: i64, k: i64) -> HodgeDiamond {
    fano_even_diamond(EvenFanoParams::new(g, k).unwrap()).unwrap()
}

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

fn powers(exps: &[i64]) -> LaurentPoly {
    exps.iter().map(|&e| LaurentPoly::var_pow(e)).sum()
}

fn genus_four() -> Outcome {
    let f = odd(4, 1);
    ensure!(f.dimension() == 10, "dim F_1 = {}", f.dimension());
    for (p, q, want) in [(5, 5, 18), (6, 4, 6), (4, 6, 6), (3, 2, 4), (0, 0, 1)] {
        ensure!(f.h(p, q) == big(want), "F_1 h^{p},{q} = {}", f.h(p, q));
    }
    ensure!(f.betti(0).unwrap() == big(1), "F_1 b_0");
    let c = curve_diamond(4).unwrap();
    ensure!(
        c.h(0, 0) == big(1) && c.h(1, 0) == big(4) && c.h(0, 1) == big(4),
        "curve"
    );
    let s = sym_curve_diamond(4, 2).unwrap();
    let rows: Vec<Vec<BigUint>> = s.rows().map(<[BigUint]>::to_vec).collect();
    let want = [[1, 4, 6], [4, 17, 4], [6, 4, 1]];
    for (p, row) in want.iter().enumerate() {
        for (q, &h) in row.iter().enumerate() {
            ensure!(rows[p][q] == big(h), "Sym^2 C h^{p},{q} = {}", rows[p][q]);
        }
    }
    Ok(())
}

fn section_example() -> Outcome {
    let want = [
        powers(&[0, 1, 2, 4, 5, 6, 8, 9, 10]),
        powers(&[2, 3, 6, 7]),
        powers(&[4]),
    ];
    for (i, w) in want.iter().enumerate() {
        let got = m_polynomial(4, 1, i as i64).map_err(|e| e.to_string())?;
        ensure!(&got == w, "M_4,1,{i} = {got}");
    }
    Ok(())
}

fn conjecture_b_sweep() -> Outcome {
    let mut count = 0;
    for g in 2..=12 {
        for k in 0..=g - 2 {
            let r = verify_conjecture_b(g, k).map_err(|e| e.to_string())?;
            ensure!(r.is_verified(), "{} failed", r.label());
            ensure!(
                r.effectivity().len() as i64 == k + 2,
                "{} effectivity",
                r.label()
            );
            count += 1;
        }
    }
    ensure!(count == 66, "{count} instances");
    Ok(())
}

fn multiplicity_at_one() -> Outcome {
    for g in 2..=40 {
        for k in 0..=g - 2 {
            for i in 0..=k + 1 {
                let n = 2 * g - 4 - k - i;
                let closed = binomial(n, k + 1 - i).unwrap() + 2 * binomial(n, k - i).unwrap();
                let got = m_polynomial(g, k, i)
                    .map_err(|e| e.to_string())?
                    .eval_at_one();
                ensure!(got == closed, "g={g} k={k} i={i}: {got} vs {closed}");
            }
        }
    }
    Ok(())
}

fn k0_oracle() -> Outcome {
    for g in 2..=12 {
        let lhs = odd(g, 0).e_polynomial();
        let rhs = lemma_k0_oracle(g).map_err(|e| e.to_string())?;
        ensure!(lhs == rhs, "g={g}");
    }
    Ok(())
}

fn top_k_oracle() -> Outcome {
    for g in 2..=12 {
        for i in 0..=g - 1 {
            let want = if i == g - 1 {
                powers(&[g - 1])
            } else {
                powers(&[i, 3 * g - 3 - 2 * i])
            };
            let got = m_polynomial(g, g - 2, i).map_err(|e| e.to_string())?;
            ensure!(got == want, "g={g} i={i}: {got}");
        }
    }
    Ok(())
}

fn stacky_agreement() -> Outcome {
    for g in 2..=20 {
        for k in 0..=g - 2 {
            let target = binomial(g, k + 1).unwrap() * BigInt::from(4).pow((k + 1) as u32);
            let euler = even(g, k).euler();
            let closed = euler_closed_form(g, k).map_err(|e| e.to_string())?;
            let rhs = stacky_rhs_length(g, k).map_err(|e| e.to_string())?;
            ensure!(
                euler == target && closed == target && rhs == target,
                "g={g} k={k}"
            );
        }
    }
    Ok(())
}

fn combinatorial_suite() -> Outcome {
    for m in 0..=30 {
        for a in (0..=60).step_by(2) {
            ensure!(gessel_identity_check(m, a).unwrap(), "gessel m={m} a={a}");
        }
    }
    for n in 0..=40 {
        for k in 0..=n {
            for j in 0..=k {
                ensure!(
                    chu_vandermonde_check(n, j, k).unwrap(),
                    "chu n={n} j={j} k={k}"
                );
            }
        }
    }
    Ok(())
}

fn check_diamond(name: &str, d: &HodgeDiamond) -> Outcome {
    let n = d.dimension() as i64;
    ensure!(d.h(0, 0) == big(1), "{name}: h00");
    for p in 0..=n {
        for q in 0..=n {
            ensure!(d.h(p, q) == d.h(q, p), "{name}: symmetry at {p},{q}");
            ensure!(d.h(p, q) == d.h(n - p, n - q), "{name}: duality at {p},{q}");
        }
    }
    let b = d.betti_numbers();
    ensure!(b.iter().eq(b.iter().rev()), "{name}: Poincaré duality");
    Ok(())
}

fn structural_suite() -> Outcome {
    for g in 2..=9 {
        for k in 0..=g - 2 {
            let d = odd(g, k);
            check_diamond(&format!("odd {g},{k}"), &d)?;
            ensure!(d.betti(2).unwrap() == big(1), "odd {g},{k}: b2");
        }
    }
    for g in 2..=12 {
        for k in 0..=g - 2 {
            let d = even(g, k);
            let name = format!("even {g},{k}");
            check_diamond(&name, &d)?;
            ensure!(d.is_hodge_tate(), "{name}: not Hodge-Tate");
            let b = d.betti_numbers();
            ensure!(
                b.iter().skip(1).step_by(2).all(|x| *x == big(0)),
                "{name}: odd Betti"
            );
            if k <= g - 3 {
                ensure!(b[2] == big(1), "{name}: b2 = {}", b[2]);
            }
        }
    }
    for g in 0..=6 {
        check_diamond("curve", &curve_diamond(g).unwrap())?;
        check_diamond("jacobian", &jacobian_diamond(g).unwrap())?;
        for n in 0..=6 {
            check_diamond("sym", &sym_curve_diamond(g, n).unwrap())?;
        }
    }
    for n in 0..=8 {
        check_diamond("projective", &projective_space_diamond(n).unwrap())?;
    }
    for a in 2..=8 {
        for b in a - 1..=a + 6 {
            let ker = cvx_kernel(a, b).map_err(|e| e.to_string())?;
            ensure!(ker.is_symmetric(), "N({a},{b};c) not symmetric in c");
            for c in -60..=60 {
                ensure!(ker.coeff(c) == ker.coeff(-c), "N({a},{b};{c})");
            }
        }
    }
    let laws = verify_q_binomial_laws(40).map_err(|e| e.to_string())?;
    ensure!(laws.is_verified(), "q-binomial laws: {:?}", laws.notes());
    for n in 1..=40 {
        for m in 1..=n {
            let whole = gauss_binomial(n, m).unwrap();
            let a = gauss_binomial(n - 1, m - 1).unwrap();
            let b = gauss_binomial(n - 1, m).unwrap();
            ensure!(whole == &a + &b.shift(m), "Pascal at {n},{m}");
            ensure!(whole == &a.shift(n - m) + &b, "dual Pascal at {n},{m}");
        }
    }
    Ok(())
}

fn sanity_anchors() -> Outcome {
    let dp4 = even(2, 0);
    ensure!(dp4.dimension() == 2, "dP4 dimension");
    let diag: Vec<BigUint> = (0..=2).map(|p| dp4.h(p, p)).collect();
    ensure!(diag == [big(1), big(6), big(1)], "dP4 diagonal {diag:?}");
    let three = odd(2, 0);
    ensure!(three.h(2, 1) == big(2), "threefold h21 = {}", three.h(2, 1));
    ensure!(three.euler() == BigInt::from(0), "threefold euler");
    ensure!(odd(4, 1).euler() == BigInt::from(0), "F_1 euler for g=4");
    Ok(())
}

fn run(index: usize, name: &str, limit: Duration, check: fn() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome =
        catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".to_string()));
    let elapsed = start.elapsed();
    let (pass, detail) = match outcome {
        Ok(()) if elapsed <= limit => (true, String::new()),
        Ok(()) => (false, " over time budget".to_string()),
        Err(e) => (false, format!(" {e}")),
    };
    println!(
        "criterion {index:>2} {:<4} {name} ({:.0} ms, limit {} s){detail}",
        if pass { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64() * 1e3,
        limit.as_secs()
    );
    pass
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria: [Criterion; 10] = [
        ("genus-4 diamonds", secs(1), genus_four),
        ("worked multiplicity polynomials", secs(1), section_example),
        (
            "E-polynomial decomposition sweep",
            secs(60),
            conjecture_b_sweep,
        ),
        ("multiplicities at L=1", secs(10), multiplicity_at_one),
        ("k=0 oracle", secs(5), k0_oracle),
        ("k=g-2 oracle", secs(5), top_k_oracle),
        ("stacky count agreement", secs(30), stacky_agreement),
        ("binomial identity suite", secs(10), combinatorial_suite),
        ("structural properties", secs(30), structural_suite),
        ("sanity anchors", secs(1), sanity_anchors),
    ];
    let mut all = true;
    for (i, (name, limit, check)) in criteria.into_iter().enumerate() {
        all &= run(i + 1, name, limit, check);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
