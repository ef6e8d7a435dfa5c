//! Reading and writing BPAs as text documents.
//!
//! The document format declares one frame (optionally embedded with
//! `label@position`) and any number of named BPAs. Masses accept
//! fractions, `#` starts a comment, and emit ∘ parse is the identity.

use evidist::{dempster_combine, distance_jousselme, BpaDocument, Result};

const DOCUMENT: &str = "\
# two sensor reports over one scale
frame: 1@1 2@2 3@3 4@4 5@5

bpa sensor_a:
  1/3 : { 2 }
  1/3 : { 2, 3 }
  1/3 : { 2, 3, 4 }

bpa sensor_b:
  0.9 : { 3 }
  0.1 : { 1, 2, 3, 4, 5 }
";

fn main() -> Result<()> {
    let doc: BpaDocument = DOCUMENT.parse()?;
    println!(
        "parsed {} BPAs over a {}-element frame: {}",
        doc.len(),
        doc.frame().len(),
        doc.names().collect::<Vec<_>>().join(", "),
    );

    let a = doc.require("sensor_a")?;
    let b = doc.require("sensor_b")?;
    println!("d_jousselme(a, b) = {:.6}", distance_jousselme(a, b)?);

    let fused = dempster_combine(a, b)?;
    let out = BpaDocument::new(doc.frame().clone(), [("fused", fused)])?;
    println!();
    print!("{}", out.emit()?);
    Ok(())
}
