//! Library side of the `girth` command: instance loading, algorithm
//! dispatch, oracle checks and report rendering.

pub mod bench;
pub mod report;
pub mod run;

pub use bench::{fit_exponent, run_doubling, BenchPoint};
pub use report::{ratio, AlgoResult, InstanceDescriptor, OracleCheck, RunReport};
pub use run::{generator_line, run_instance, Algorithm, RunOptions};
