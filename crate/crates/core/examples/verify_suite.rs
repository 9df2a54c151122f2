//! Runs every verification check with the default ranges.

use deletion_games::verify::{run_all, VerifyConfig};

fn main() -> deletion_games::Result<()> {
    let reports = run_all(&VerifyConfig::default())?;
    for r in &reports {
        println!("{}", r.summary());
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    println!("{} checks, {failed} failed", reports.len());
    Ok(())
}
