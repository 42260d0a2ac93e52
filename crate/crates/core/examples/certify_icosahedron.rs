//! Certifies AT <= 5 for the icosahedron, writes the certificate as JSON,
//! and checks it again from the JSON alone.

use alon_tarsi::graph::generate;
use alon_tarsi::planar_cert::{certify_with, verify_certificate, Certificate, CertifyOptions};

fn main() -> alon_tarsi::Result<()> {
    let opts = CertifyOptions {
        name: "icosahedron".into(),
        trace: true,
        ..CertifyOptions::default()
    };
    let cert = certify_with(&generate::icosahedron(), &opts)?;
    println!(
        "max out-degree {}, |EE| = {}, |OE| = {}",
        cert.max_out_degree, cert.even_count, cert.odd_count
    );
    for step in cert.trace.iter().flatten().rev().take(5) {
        println!("  {step:?}");
    }

    let text = cert.to_json();
    let report = verify_certificate(&Certificate::parse(&text)?);
    for check in &report.checks {
        println!("{:16} {}  {}", check.name, if check.passed { "ok" } else { "FAILED" }, check.detail);
    }
    assert!(report.passed());
    Ok(())
}
