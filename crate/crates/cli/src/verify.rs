use fano_chern::catalog::{Catalog, ExceptionalCase, PolarizedPair, Positivity};
use fano_chern::checks::VerificationReport;
use fano_chern::families::{enumerate_ci, FamilySpec};
use fano_chern::minimalfamily::{
    ci_family_dimension, verify_character_formula_symbolic, verify_ci_character_formula, verify_todd_identity,
    verify_universal_family_identities,
};
use rayon::prelude::*;

use crate::rows::VerifyItem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    /// Universal-family identities (closed forms of Z_k and reductions).
    #[value(name = "claim31")]
    Claim31,
    /// Symbolic re-derivation of the H_x character formula.
    #[value(name = "prop11-sym")]
    Prop11Sym,
    /// Character formula against lines on complete intersections.
    #[value(name = "prop11-ci")]
    Prop11Ci,
    /// Catalog lattice checks and classification of (a)-(e).
    #[value(name = "catalog")]
    Catalog,
    /// sum_j A_{k+1-j}/j! = 1/k!.
    #[value(name = "todd-identity")]
    ToddIdentity,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Claim31 => "claim31",
            Suite::Prop11Sym => "prop11-sym",
            Suite::Prop11Ci => "prop11-ci",
            Suite::Catalog => "catalog",
            Suite::ToddIdentity => "todd-identity",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Bounds {
    pub n_max: u32,
    pub d_max: Option<u32>,
    pub k_max: Option<u32>,
    pub m_max: u32,
    pub max_c: u32,
}

/// Largest bounds accepted per suite: `(n_max, k_max, m_max)`.
pub const LIMITS: (u32, u32, u32) = (16, 8, 12);
pub const TODD_K_LIMIT: u32 = 200;

fn item(suite: Suite, at: String, report: VerificationReport) -> VerifyItem {
    let failures: Vec<_> = report.failures().cloned().collect();
    VerifyItem { suite: suite.name().to_string(), pass: failures.is_empty(), checks: report.len(), failures, at }
}

pub fn check_bounds(suite: Suite, b: &Bounds) -> Result<(), String> {
    let (n_lim, k_lim, m_lim) = LIMITS;
    match suite {
        Suite::ToddIdentity => {
            let k = b.k_max.unwrap_or(20);
            if k == 0 || k > TODD_K_LIMIT {
                return Err(format!("--k-max must be in 1..={TODD_K_LIMIT}"));
            }
        }
        Suite::Catalog => {
            if b.m_max == 0 || b.m_max > m_lim {
                return Err(format!("--m-max must be in 1..={m_lim}"));
            }
        }
        _ => {
            if b.n_max == 0 || b.n_max > n_lim {
                return Err(format!("--n-max must be in 1..={n_lim}"));
            }
            let k = b.k_max.unwrap_or(5);
            if k == 0 || k > k_lim {
                return Err(format!("--k-max must be in 1..={k_lim}"));
            }
        }
    }
    Ok(())
}

fn model_points(b: &Bounds) -> Vec<(i64, i64)> {
    let mut points = Vec::new();
    for n in 1..=b.n_max {
        let d_top = b.d_max.map_or(n - 1, |d| d.min(n - 1));
        for d in 0..=d_top {
            points.push((n as i64, d as i64));
        }
    }
    points
}

pub fn run(suite: Suite, b: &Bounds) -> fano_chern::Result<Vec<VerifyItem>> {
    let k_max = b.k_max.unwrap_or(match suite {
        Suite::ToddIdentity => 20,
        _ => 5,
    });
    match suite {
        Suite::Claim31 | Suite::Prop11Sym => model_points(b)
            .into_par_iter()
            .map(|(n, d)| {
                let report = if suite == Suite::Claim31 {
                    verify_universal_family_identities(n, d, k_max)?
                } else {
                    verify_character_formula_symbolic(n, d, k_max)?
                };
                Ok(item(suite, format!("n={n} d={d} k_max={k_max}"), report))
            })
            .collect(),
        Suite::Prop11Ci => {
            let specs: Vec<FamilySpec> = (1..=b.n_max).flat_map(|n| enumerate_ci(n, b.max_c)).collect();
            specs
                .into_par_iter()
                .filter_map(|spec| {
                    let FamilySpec::CompleteIntersection { n, degrees } = &spec else { unreachable!() };
                    if ci_family_dimension(*n, degrees) < 0 {
                        return None;
                    }
                    Some(verify_ci_character_formula(*n, degrees, k_max).map(|r| item(suite, format!("{spec} k_max={k_max}"), r)))
                })
                .collect()
        }
        Suite::Catalog => {
            let catalog = Catalog::standard(b.m_max, b.d_max.unwrap_or(8))?;
            let mut items: Vec<VerifyItem> = catalog
                .pairs
                .iter()
                .map(|p| {
                    let mut single = Catalog { pairs: vec![p.clone()] }.validate();
                    if let Ok(c) = p.classify() {
                        single.check_bool("classified", p.label.clone(), c.to_string(), true);
                    }
                    item(suite, p.label.clone(), single)
                })
                .collect();
            let mut cases = VerificationReport::new();
            for m in 1..=b.m_max {
                for case in [ExceptionalCase::A, ExceptionalCase::B, ExceptionalCase::C, ExceptionalCase::D, ExceptionalCase::E] {
                    let pair = PolarizedPair::case(case, m)?;
                    let at = format!("{case} m={m}");
                    cases.check("-2K - dL", at.clone(), &pair.positivity_of_twist(), &Positivity::Ample);
                    let got = pair.classify().map(|c| c.to_string()).unwrap_or_else(|e| e.to_string());
                    cases.check("classify_pair", at, &got, &format!("{case} m={m}"));
                }
            }
            items.push(item(suite, format!("(a)-(e) m=1..{}", b.m_max), cases));
            Ok(items)
        }
        Suite::ToddIdentity => Ok(vec![item(suite, format!("k=1..{k_max}"), verify_todd_identity(k_max))]),
    }
}
