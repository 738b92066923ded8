#![no_main]

use libfuzzer_sys::fuzz_target;
use linsolve_cli::system_file::parse_system_file;
use linsolve_core::SolverConfig;

fuzz_target!(|text: &str| {
    if let Ok(file) = parse_system_file(text) {
        let sys = &file.system;
        assert_eq!(sys.rhs().len(), sys.equations());
        if let Some(g) = &file.guess {
            assert_eq!(g.len(), sys.unknowns());
        }
        // keep the solvers cheap on large inputs
        if sys.equations() <= 8 && sys.unknowns() <= 8 {
            let cfg = SolverConfig::default().with_max_iterations(50);
            let _ = linsolve_core::solve_gauss_jordan(sys, &cfg);
            let _ = linsolve_core::solve_cramer(sys, &cfg);
            let _ = linsolve_core::solve_iterative(
                sys,
                file.guess.as_ref(),
                linsolve_core::IterativeMethod::GaussSeidel,
                &cfg,
            );
        }
    }
});
