// Write SVG drawings of a planar complex and a cube complex.

use newton_dual::cellres::{build_borel_complex, build_planar_complex};
use newton_dual::dual::ExponentBound;
use newton_dual::fixtures;
use newton_dual::io::{complex_svg, IdealDocument};

fn main() {
    let dir = std::env::temp_dir().join("newton-dual-svg");
    std::fs::create_dir_all(&dir).unwrap();

    let d = fixtures::compatible_square();
    let x = build_planar_complex(&d, &ExponentBound::new(fixtures::compatible_square_bound())).unwrap();
    let planar = dir.join("square.svg");
    std::fs::write(&planar, complex_svg(&x, &IdealDocument::default_names(3)).unwrap()).unwrap();

    let i = fixtures::borel_cube();
    let x = build_borel_complex(&i, &ExponentBound::newton(&i).unwrap()).unwrap();
    let cube = dir.join("cube.svg");
    std::fs::write(&cube, complex_svg(&x, &IdealDocument::default_names(4)).unwrap()).unwrap();

    println!("wrote {} and {}", planar.display(), cube.display());
}
