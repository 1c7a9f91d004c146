//! Recomputes every published value and reports each comparison.

use serde::Serialize;

use crate::arith::{format_rational, is_prime, ratio, ExactRational, SquareFreeLevel};
use crate::dims::{self, FullLevelCoefficients, Weight};
use crate::error::Result;
use crate::irreps;
use crate::newforms::{self, bounds_prime};

pub const VERIFICATION_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    /// Which published table or statement the expected value comes from.
    pub source: String,
    pub expected: String,
    pub computed: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub status: &'static str,
    pub total: usize,
    pub failed: usize,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "{mark}  {} [{}]: expected {}, computed {}\n",
                c.name, c.source, c.expected, c.computed
            ));
        }
        out.push_str(&format!(
            "{}: {} of {} checks passed\n",
            self.status,
            self.total - self.failed,
            self.total
        ));
        out
    }
}

#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn push<T: ToString>(
        &mut self,
        name: String,
        source: &str,
        expected: &str,
        computed: Result<T>,
    ) {
        let computed = match computed {
            Ok(v) => v.to_string(),
            Err(e) => format!("error: {e}"),
        };
        let passed = computed == expected;
        self.0.push(Check {
            name,
            source: source.into(),
            expected: expected.into(),
            computed,
            passed,
        });
    }

    fn push_bool(
        &mut self,
        name: &str,
        source: &str,
        result: Result<std::result::Result<(), String>>,
    ) {
        let (computed, passed) = match result {
            Ok(Ok(())) => ("holds".to_string(), true),
            Ok(Err(msg)) => (format!("violated: {msg}"), false),
            Err(e) => (format!("error: {e}"), false),
        };
        self.0.push(Check {
            name: name.into(),
            source: source.into(),
            expected: "holds".into(),
            computed,
            passed,
        });
    }
}

fn w(k: u32) -> Weight {
    Weight::new(k).expect("positive weight")
}

fn rational(r: &ExactRational) -> String {
    format_rational(r)
}

pub fn verify_paper() -> VerificationReport {
    verify_with(&FullLevelCoefficients::EIE)
}

/// Runs every check, evaluating the full-level formula with `coeffs`.
pub fn verify_with(coeffs: &FullLevelCoefficients) -> VerificationReport {
    let mut checks = Checks::default();

    const FULL: &str = "Sp(4,Z) weight table";
    for (k, d) in (10..=20).zip([1, 0, 1, 0, 1, 0, 2, 0, 2, 0, 3]) {
        checks.push(
            format!("full-level k={k}"),
            FULL,
            &d.to_string(),
            dims::dim_full_level_with(coeffs, w(k)),
        );
    }
    for k in 4..=9 {
        checks.push(
            format!("full-level vanishing k={k}"),
            "vanishing below weight 10",
            "0",
            dims::dim_full_level_with(coeffs, w(k)),
        );
    }

    const GAMMA0: &str = "Gamma_0(p) weight-4 table";
    for (p, d) in [(2, 0), (3, 1), (5, 1), (7, 3), (11, 7), (13, 11)] {
        checks.push(
            format!("gamma0 k=4 p={p}"),
            GAMMA0,
            &d.to_string(),
            dims::dim_gamma0(w(4), p),
        );
    }
    for n in [1, 2, 15, 360] {
        checks.push(
            format!("gamma0 k=1 N={n}"),
            "weight-1 vanishing",
            "0",
            dims::dim_gamma0(w(1), n),
        );
    }

    const PARA: &str = "K(p) weight-4 table";
    for (p, d) in [
        (2, 0),
        (3, 0),
        (5, 0),
        (7, 1),
        (11, 1),
        (13, 2),
        (17, 2),
        (19, 3),
    ] {
        checks.push(
            format!("paramodular k=4 p={p}"),
            PARA,
            &d.to_string(),
            dims::dim_paramodular_weight4(p),
        );
    }
    for &(p, d) in dims::PARAMODULAR_WEIGHT4_TABLE
        .iter()
        .filter(|(p, _)| *p >= 5)
    {
        checks.push(
            format!("paramodular formula p={p}"),
            "K(p) weight-4 formula against table",
            &d.to_string(),
            dims::paramodular_weight4_formula(p).map(|r| rational(&r)),
        );
    }

    const PRINCIPAL: &str = "Gamma(p) weight-4 table";
    for (p, d) in [
        (2, 0u64),
        (3, 15),
        (5, 5655),
        (7, 199500),
        (11, 20683575),
        (13, 112567455),
        (17, 1687834800),
    ] {
        checks.push(
            format!("principal k=4 p={p}"),
            PRINCIPAL,
            &d.to_string(),
            dims::dim_principal_prime(w(4), p),
        );
    }
    for (k, d) in (4..=10).zip([15, 76, 200, 405, 709, 1130, 1686]) {
        checks.push(
            format!("principal k={k} p=3"),
            "Gamma(3) weight table",
            &d.to_string(),
            dims::dim_principal_prime(w(k), 3),
        );
    }
    for (k, d) in (4..=10).zip([5655, 18980, 43680, 83005, 140205, 218530, 321230]) {
        checks.push(
            format!("principal k={k} p=5"),
            "Gamma(5) weight table",
            &d.to_string(),
            dims::dim_principal_prime(w(k), 5),
        );
    }
    checks.push(
        "principal k=4 N=15".into(),
        "printed value of dim S_4(Gamma(15))",
        "69023360250000000",
        SquareFreeLevel::parse(15).and_then(|l| dims::dim_principal(w(4), &l)),
    );

    checks.push_bool(
        "prime/product consistency k=4..30",
        "square-free formula at one prime",
        (|| {
            for k in 4..=30 {
                for p in [3, 5, 7, 11, 13, 17] {
                    let a = dims::dim_principal(w(k), &SquareFreeLevel::parse(p)?)?;
                    let b = dims::dim_principal_prime(w(k), p)?;
                    if a != b {
                        return Ok(Err(format!("k={k} p={p}: {a} != {b}")));
                    }
                }
            }
            Ok(Ok(()))
        })(),
    );

    const COROLLARY: &str = "weight-4 level-3 newform bounds";
    let b43 = bounds_prime(w(4), 3);
    checks.push(
        "bounds k=4 p=3 lower".into(),
        COROLLARY,
        "3/32",
        b43.clone().map(|b| rational(b.lower())),
    );
    checks.push(
        "bounds k=4 p=3 upper".into(),
        COROLLARY,
        "5/2",
        b43.map(|b| rational(b.upper())),
    );
    checks.push(
        "bounds k=4 p=5 lower".into(),
        "prime-level lower bound",
        "145/24",
        bounds_prime(w(4), 5).map(|b| rational(b.lower())),
    );

    checks.push_bool(
        "lower bound times a1 equals dimension",
        "prime-level lower bound",
        (|| {
            for k in 4..=20 {
                for p in [3, 5, 7, 11, 13] {
                    let lower = bounds_prime(w(k), p)?.lower().clone();
                    let a1 = irreps::irrep_dim(1, p)?.to_rational();
                    let dim = dims::dim_principal_prime(w(k), p)?.to_rational();
                    if lower * a1 != dim {
                        return Ok(Err(format!("k={k} p={p}")));
                    }
                }
            }
            Ok(Ok(()))
        })(),
    );
    checks.push_bool(
        "bounds agree at n=1 for p=3",
        "prime-level and square-free bounds",
        (|| {
            for k in 4..=10 {
                let t1 = bounds_prime(w(k), 3)?;
                let t2 = newforms::bounds_squarefree(w(k), &SquareFreeLevel::parse(3)?)?;
                if t1 != t2 {
                    return Ok(Err(format!("k={k}")));
                }
            }
            Ok(Ok(()))
        })(),
    );

    checks.push(
        "decomposition of 15 at p=3".into(),
        "unique weight-4 level-3 decomposition",
        "1*a14",
        newforms::decompose(3, &dims::DimValue::from_u64(15), false).map(|sols| {
            sols.iter()
                .map(|d| d.terms())
                .collect::<Vec<_>>()
                .join(" | ")
        }),
    );
    let report = newforms::analyze_level(w(4), 3);
    checks.push(
        "newform dimension k=4 p=3".into(),
        COROLLARY,
        "1",
        report.clone().map(|r| {
            r.newform_dimension
                .map_or("undetermined".to_string(), |n| n.to_string())
        }),
    );
    checks.push(
        "local component k=4 p=3".into(),
        "fixed-vector identification at level 3",
        "tau(T, nu^(-1/2) sigma); Saito-Kurokawa",
        report.map(|r| match r.local_component {
            Some(lc) if lc.saito_kurokawa_lift => format!("{}; Saito-Kurokawa", lc.identified),
            Some(lc) => lc.identified.to_string(),
            None => "undetermined".into(),
        }),
    );

    checks.push_bool(
        "decompose count matches counting table",
        "exhaustive enumeration",
        (|| {
            for p in [3, 5] {
                for target in 0..=200 {
                    let t = dims::DimValue::from_u64(target);
                    let listed = newforms::decompose(p, &t, false)?.len() as u128;
                    let counted = newforms::count_decompositions(p, &t, false)?;
                    if counted != Some(listed) {
                        return Ok(Err(format!("p={p} D={target}")));
                    }
                }
            }
            Ok(Ok(()))
        })(),
    );

    checks.push_bool(
        "irrep table identities p<=100",
        "GSp(4,F_p) dimension table",
        (|| {
            for p in (3..=100).filter(|&p| is_prime(p)) {
                let a = |n| irreps::irrep_dim(n, p).map(|d| d.to_rational());
                let pr = ratio(p as i64, 1);
                if a(13)? + a(15)? != a(14)? * ratio(2, 1)
                    || a(2)? != &pr * a(10)?
                    || a(5)? != a(4)? - ratio(1, 1)
                    || a(4)? != &pr * &pr * &pr * &pr
                {
                    return Ok(Err(format!("p={p}")));
                }
            }
            Ok(Ok(()))
        })(),
    );

    let checks = checks.0;
    let failed = checks.iter().filter(|c| !c.passed).count();
    VerificationReport {
        schema_version: VERIFICATION_SCHEMA_VERSION,
        status: if failed == 0 { "pass" } else { "fail" },
        total: checks.len(),
        failed,
        checks,
    }
}
