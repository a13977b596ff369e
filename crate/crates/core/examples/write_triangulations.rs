//! Writes the built-in triangulations as JSON files into a directory.
use snc_core::snc::Triangulation;

fn main() -> std::io::Result<()> {
    let dir = std::env::args().nth(1).unwrap_or_else(|| "data".into());
    std::fs::create_dir_all(&dir)?;
    let surfaces = [
        ("tetrahedron", Triangulation::tetrahedron()),
        ("torus", Triangulation::torus()),
        ("rp2", Triangulation::projective_plane()),
        ("klein", Triangulation::klein_bottle()),
        ("genus2", Triangulation::genus_two()),
        ("icosahedron", Triangulation::icosahedron()),
    ];
    for (name, t) in surfaces {
        let path = format!("{dir}/{name}.json");
        std::fs::write(&path, t.to_json() + "\n")?;
        println!("{path}: {} vertices, {} triangles", t.vertices, t.triangles.len());
    }
    Ok(())
}
