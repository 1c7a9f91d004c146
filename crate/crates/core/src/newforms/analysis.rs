//! Level analysis: the space dimension at `Γ(p)`, its newform bounds, every
//! decomposition of the dimension into unitary irrep dimensions and, at the one
//! point where it is settled (weight 4, level 3), the local component.

use serde::Serialize;

use crate::arith::{format_rational, FractionParts};
use crate::dims::{self, DimValue, Weight};
use crate::error::{Error, Result};
use crate::newforms::bounds::{bounds_prime, BoundPair};
use crate::newforms::decompose::{
    count_decompositions, decompose, Decomposition, DEFAULT_SOLUTION_CAP,
};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

/// Fixed-vector facts for one candidate local constituent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConstituentFacts {
    pub label: &'static str,
    pub has_gamma0_fixed_vector: bool,
    pub has_paramodular_fixed_vector: bool,
    pub saito_kurokawa: bool,
}

/// The two non-supercuspidal constituents whose restriction has dimension
/// `a₁₄`; only they are covered.
pub const A14_CANDIDATES: [ConstituentFacts; 2] = [
    ConstituentFacts {
        label: "tau(T, nu^(-1/2) sigma)",
        has_gamma0_fixed_vector: true,
        has_paramodular_fixed_vector: false,
        saito_kurokawa: true,
    },
    ConstituentFacts {
        label: "L(nu^(1/2) St_GL(2), nu^(-1/2) sigma)",
        has_gamma0_fixed_vector: false,
        has_paramodular_fixed_vector: true,
        saito_kurokawa: false,
    },
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalComponent {
    pub irrep_index: usize,
    pub candidates: Vec<ConstituentFacts>,
    pub dim_gamma0_weight4: String,
    pub dim_paramodular_weight4: String,
    pub identified: &'static str,
    pub saito_kurokawa_lift: bool,
    pub conclusion: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub weight: u32,
    pub prime: u64,
    pub dimension: String,
    pub lower_bound: FractionParts,
    pub upper_bound: FractionParts,
    /// Exact number of decompositions, when it could be determined.
    pub solution_count: Option<String>,
    /// Every decomposition as `[c₁, …, c₁₅]`; absent when there are too many.
    pub solutions: Option<Vec<Vec<u64>>>,
    pub solutions_truncated: bool,
    pub newform_dimension: Option<u64>,
    pub conclusion: Option<String>,
    pub local_component: Option<LocalComponent>,
    #[serde(skip)]
    bounds: Option<BoundPair>,
    #[serde(skip)]
    decompositions: Vec<Decomposition>,
}

impl AnalysisReport {
    pub fn bounds(&self) -> &BoundPair {
        self.bounds
            .as_ref()
            .expect("bounds are always set by analyze_level")
    }

    pub fn decompositions(&self) -> &[Decomposition] {
        &self.decompositions
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let b = self.bounds();
        out.push_str(&format!("weight: {}\nprime: {}\n", self.weight, self.prime));
        out.push_str(&format!(
            "dim S_{}(Gamma({})): {}\n",
            self.weight, self.prime, self.dimension
        ));
        out.push_str(&format!(
            "newform bounds: {} <= dim <= {}\n",
            format_rational(b.lower()),
            format_rational(b.upper())
        ));
        match &self.solution_count {
            Some(n) => out.push_str(&format!("decompositions: {n}\n")),
            None => out.push_str("decompositions: unknown (target too large to count)\n"),
        }
        if self.solutions_truncated {
            out.push_str("  (solution list omitted: above the enumeration cap)\n");
        } else {
            for d in &self.decompositions {
                out.push_str(&format!("  {}\n", d.terms()));
            }
        }
        if let Some(n) = self.newform_dimension {
            out.push_str(&format!("newform dimension: {n}\n"));
        }
        if let Some(c) = &self.conclusion {
            out.push_str(&format!("{c}\n"));
        }
        if let Some(lc) = &self.local_component {
            out.push_str(&format!(
                "local component: {} (dim S_4(Gamma_0(3)) = {}, dim S_4(K(3)) = {})\n{}\n",
                lc.identified, lc.dim_gamma0_weight4, lc.dim_paramodular_weight4, lc.conclusion
            ));
        }
        out
    }
}

fn identify_local_component() -> Result<LocalComponent> {
    let four = Weight::new(4)?;
    let gamma0 = dims::dim_gamma0(four, 3)?;
    let paramodular = dims::dim_paramodular_weight4(3)?;
    let matching: Vec<&ConstituentFacts> = A14_CANDIDATES
        .iter()
        .filter(|c| {
            c.has_gamma0_fixed_vector == !gamma0.is_zero()
                && c.has_paramodular_fixed_vector == !paramodular.is_zero()
        })
        .collect();
    let [found] = matching.as_slice() else {
        return Err(Error::IntegralityFailure {
            context: "local component identification at (4, 3)".into(),
            value: format!("{} matching candidates", matching.len()),
        });
    };
    let conclusion = if found.saito_kurokawa {
        format!("local component at 3 is {}, a Saito-Kurokawa lifting; all weight-4 level-3 cusp forms are Saito-Kurokawa lifts, and S_4^new(Gamma(3)) = S_4(Gamma_0(3))", found.label)
    } else {
        format!("local component at 3 is {}", found.label)
    };
    Ok(LocalComponent {
        irrep_index: 14,
        candidates: A14_CANDIDATES.to_vec(),
        dim_gamma0_weight4: gamma0.to_string(),
        dim_paramodular_weight4: paramodular.to_string(),
        identified: found.label,
        saito_kurokawa_lift: found.saito_kurokawa,
        conclusion,
    })
}

/// Builds the full report for `S_k(Γ(p))`.
pub fn analyze_level(k: Weight, p: u64) -> Result<AnalysisReport> {
    let bounds = bounds_prime(k, p)?;
    let dim: DimValue = dims::dim_principal_prime(k, p)?;

    // Count first so the enumeration only runs when the list is small enough to keep.
    let count = count_decompositions(p, &dim, false)?;
    let (decompositions, truncated) = match count {
        Some(n) if n <= DEFAULT_SOLUTION_CAP as u128 => (decompose(p, &dim, false)?, false),
        _ => (Vec::new(), true),
    };
    let solution_count = count.map(|n| n.to_string());

    let unique = (!truncated && decompositions.len() == 1).then(|| &decompositions[0]);
    let newform_dimension = unique.map(Decomposition::total);
    let conclusion = unique.map(|d| {
        if d.total() == 1 {
            format!(
                "unique decomposition {}: a single automorphic representation accounts for the space",
                d.terms()
            )
        } else {
            format!("unique decomposition {}", d.terms())
        }
    });

    let settled_point = k.get() == 4 && p == 3;
    let local_component = match unique {
        Some(d) if settled_point && d.total() == 1 && d.multiplicity(14) == 1 => {
            Some(identify_local_component()?)
        }
        _ => None,
    };

    Ok(AnalysisReport {
        schema_version: REPORT_SCHEMA_VERSION,
        weight: k.get(),
        prime: p,
        dimension: dim.to_string(),
        lower_bound: bounds.lower().into(),
        upper_bound: bounds.upper().into(),
        solution_count,
        solutions: (!truncated).then(|| {
            decompositions
                .iter()
                .map(|d| d.multiplicities().to_vec())
                .collect()
        }),
        solutions_truncated: truncated,
        newform_dimension,
        conclusion,
        local_component,
        bounds: Some(bounds),
        decompositions,
    })
}
