//! Writes the built-in fixtures: `cargo run --example export_fixtures [dir]`.

use std::path::PathBuf;

fn main() -> std::io::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("fixtures"));
    std::fs::create_dir_all(&dir)?;
    for (stem, doc) in ydforge::export::builtin_fixtures() {
        let path = dir.join(format!("{stem}.json"));
        std::fs::write(&path, doc.to_json())?;
        println!("{}", path.display());
    }
    Ok(())
}
