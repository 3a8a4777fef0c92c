//! Whole-catalog run written as a JSON report.

use hypsum::catalog::verify_all;
use hypsum::report::{timestamp, Format, Report};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let digits = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(30);
    let started = timestamp();
    let results = verify_all(digits, None, None)?;
    let report = Report::new(digits, started, timestamp(), &results);

    let path = std::env::temp_dir().join("hypsum-report.json");
    hypsum::report::write_report(&report, &path, Format::Json)?;
    let errata = report.results.iter().filter(|r| r.status == "ERRATUM_RESOLVED").count();
    println!("{} results, {errata} resolved misprints, all ok: {}", report.results.len(), report.all_success());
    println!("wrote {}", path.display());
    Ok(())
}
