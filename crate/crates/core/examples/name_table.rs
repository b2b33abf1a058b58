//! Regenerates `data/knot_names.txt` from the embedded table of harmonic knots.
//!
//!     cargo run -p harmonic-knots --example name_table > crates/core/data/knot_names.txt

use harmonic_knots::invariants::{build_name_table, format_name_table};

fn main() {
    match build_name_table() {
        Ok(entries) => print!("{}", format_name_table(&entries)),
        Err(e) => {
            eprintln!("name table: {e}");
            std::process::exit(1);
        }
    }
}
