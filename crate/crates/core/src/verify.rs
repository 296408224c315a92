//! The complete exact suite for one Λ, as run by `xlorentz verify`.

use crate::algebra::{bar_symmetry_check, casimir_check, check_commutator_tables, group_metric_check, ladder_table_consistency};
use crate::error::Result;
use crate::half::HalfInteger;
use crate::reference::{compare_spin_half, compare_spin_one_matrices, compare_spin_one_states};
use crate::rep::{state_count_evaluations, verify_action_table, verify_representation, Representation};
use crate::report::VerificationReport;

/// Representation checks, action-table audit, commutator tables, Casimir,
/// bar symmetry, counting, the group metric, and the published Λ = ½ and
/// Λ = 1 tables when they apply.
pub fn full_report(rep: &Representation) -> Result<VerificationReport> {
    let lambda = rep.lambda();
    let mut report = VerificationReport::new(Some(lambda));
    report.extend(verify_representation(rep)?);
    report.extend(verify_action_table(rep.basis())?.report);
    report.extend(check_commutator_tables(rep));
    report.extend(casimir_check(rep));
    report.extend(bar_symmetry_check(rep));
    let count = state_count_evaluations(lambda);
    report.condition(
        "count.consistent",
        count.consistent() && count.formula == rep.dim() as u64,
        format!("formula {}, multiplet sum {}, binomial {}, dimension {}", count.formula, count.multiplet_sum, count.binomial, rep.dim()),
    );
    report.extend(ladder_table_consistency());
    report.extend(group_metric_check());
    if lambda == HalfInteger::HALF {
        report.extend(compare_spin_half(rep));
    }
    if lambda == HalfInteger::ONE {
        report.extend(compare_spin_one_states(rep.basis()));
        report.extend(compare_spin_one_matrices(rep).report);
    }
    Ok(report)
}
