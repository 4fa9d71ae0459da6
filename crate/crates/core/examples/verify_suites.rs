//! Runs every verification suite on a reduced grid, then once more with a
//! deliberately wrong constant to show the checks are live.
use dunkl_clifford::constants::{Constants, Perturbation};
use dunkl_clifford::suite::{run, run_suite, Suite, SuiteConfig};

fn main() {
    let config = SuiteConfig { max_degree: 3, t_max: 4, ..SuiteConfig::default() };
    for report in run(&Suite::ALL, &config) {
        print!("{report}");
    }
    let faulty = SuiteConfig { constants: Constants::with_fault(Perturbation::ThreeTermD), ..config };
    let report = run_suite(Suite::GegenbauerBall, &faulty);
    println!("with {} injected: failing identities {:?}", Perturbation::ThreeTermD, report.failing_identities());
}
