//! Writes an SVG of a comb polygon with its maximum witness set.

use wskit::io::{render_svg, Overlays};
use wskit::oracle::{comb_generator, comb_witnesses};
use wskit::visibility::visibility_region;

fn main() -> wskit::Result<()> {
    let p = comb_generator(3, 0);
    let w = comb_witnesses(3);
    let regions = w.iter().map(|q| visibility_region(&p, q)).collect::<wskit::Result<Vec<_>>>()?;
    let svg = render_svg(&p, &Overlays { regions, witnesses: w, ..Overlays::default() });
    let out = std::env::args().nth(1).unwrap_or_else(|| "comb3.svg".into());
    std::fs::write(&out, svg).expect("write svg");
    println!("wrote {out}");
    Ok(())
}
