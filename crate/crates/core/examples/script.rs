//! Parsing, pretty-printing and running a script.

use chern::config::Overrides;
use chern::io::dsl::parse_script;
use chern::io::script::run_script;

const TEXT: &str = "
ring S = char 32003, vars x y z;
ideal L = x^2, x*y, x*z;
quotient R = S / L;
ideal M = x, y, z;
set nmax=10;
task coeffs R M;
task depth R;
task superficial R M;
";

fn main() -> chern::Result<()> {
    let script = parse_script(TEXT)?;
    print!("{script}");
    let cli = Overrides {
        seed: Some(3),
        ..Overrides::default()
    };
    for r in run_script(&script, &cli)? {
        println!(
            "{} {} {} e={:?} {:?}",
            r.claim.as_str(),
            r.entry,
            r.verdict.as_str(),
            r.e,
            r.lengths
        );
    }
    Ok(())
}
