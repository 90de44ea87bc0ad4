use crate::error::{Error, Result};
use crate::exact::{compute_param, LowerCert, ParamResult, ParamTag, UpperCert};
use crate::families::FamilySpec;
use crate::iso::{find_subgraph_embedding, IsoOutcome};
use crate::listsolve::compute_list_param;
use crate::poly::{cns_choosable_certificate, CnsOutcome};
use crate::search::SearchConfig;

/// `ceil((4n + 2 t1 - 3) / 9)` with `t1 = n mod 3`.
pub fn wheel_closed_form_upper(n: usize) -> usize {
    (4 * n + 2 * (n % 3) - 3).div_ceil(9)
}

/// Bounds on `src^ℓ(W_n)` for `n >= 7` through `χ_ℓ` of the complement of `C_n^2`.
///
/// The interval combines `src(W_n)` and `χ(C_n')` from below with the
/// closed-form bound, an embedding into `C_9'` (whose graph polynomial
/// certifies 3-choosability) and the direct `χ_ℓ(C_n')` computation from above.
pub fn srcl_wheel_upper(n: usize, cfg: &SearchConfig) -> Result<ParamResult> {
    if n < 7 {
        return Err(Error::Precondition(
            "the reduction to the complement of C_n^2 needs n >= 7".into(),
        ));
    }
    let cn = FamilySpec::CompSqCycle(n).build()?;
    let mut res = compute_list_param(&cn, ParamTag::Chil, cfg)?;
    res.param = ParamTag::Srcl;
    let closed = wheel_closed_form_upper(n);
    res.lower_hi(
        closed,
        UpperCert::ClosedForm {
            formula: format!("ceil((4*{n} + 2*{} - 3)/9)", n % 3),
        },
    );
    if n <= 9 {
        let c9 = FamilySpec::CompSqCycle(9).build()?;
        let embeds = n == 9
            || matches!(
                find_subgraph_embedding(&cn, &c9, 10_000_000),
                IsoOutcome::Isomorphic(_)
            );
        if embeds {
            if let CnsOutcome::Certificate { .. } = cns_choosable_certificate(&c9, 3, 1)? {
                let name = if n == 9 {
                    "comp-sq-cycle:9 nullstellensatz"
                } else {
                    "subgraph of comp-sq-cycle:9"
                };
                res.lower_hi(3, UpperCert::Construction { name: name.into() });
            }
        }
    }
    let wheel = FamilySpec::Wheel(n).build()?;
    let src = compute_param(
        &wheel,
        ParamTag::Src,
        &SearchConfig {
            budget: cfg.budget.saturating_sub(res.nodes),
            ..*cfg
        },
    )?;
    res.nodes += src.nodes;
    res.raise_lo(
        src.lo,
        LowerCert::Dominates {
            param: ParamTag::Src,
            value: src.lo,
        },
    );
    Ok(res)
}
