// Embeds catalog/ (manifest plus group files) into the library.
use std::fmt::Write;
use std::path::Path;

fn main() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("catalog");
    println!("cargo:rerun-if-changed={}", dir.display());
    let mut files: Vec<String> = std::fs::read_dir(&dir)
        .map(|rd| {
            rd.filter_map(|e| e.ok())
                .map(|e| e.file_name().to_string_lossy().into_owned())
                .filter(|n| n.ends_with(".grp"))
                .collect()
        })
        .unwrap_or_default();
    files.sort();

    let mut out = String::from("pub(super) static FILES: &[(&str, &str)] = &[\n");
    for f in &files {
        let path = dir.join(f);
        println!("cargo:rerun-if-changed={}", path.display());
        writeln!(out, "    ({f:?}, include_str!({:?})),", path.display().to_string()).unwrap();
    }
    out.push_str("];\n");
    let manifest = dir.join("manifest.tsv");
    println!("cargo:rerun-if-changed={}", manifest.display());
    if manifest.exists() {
        writeln!(
            out,
            "pub(super) static MANIFEST: &str = include_str!({:?});",
            manifest.display().to_string()
        )
        .unwrap();
    } else {
        out.push_str("pub(super) static MANIFEST: &str = \"\";\n");
    }
    let dest = Path::new(&std::env::var("OUT_DIR").unwrap()).join("bundled.rs");
    std::fs::write(dest, out).unwrap();
}
