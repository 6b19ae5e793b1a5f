//! Generates the CSV data for all eight figures into a directory
//! (default `figures/`).

use std::fs;
use std::path::PathBuf;

use wigner_ent::cli::{format_sig, FigureRecipe, DEFAULT_PRECISION};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "figures".into()));
    fs::create_dir_all(&dir)?;
    for id in 1..=8 {
        for curve in FigureRecipe::get(id)?.curves()? {
            let mut text = curve.columns.join(",") + "\n";
            for row in &curve.rows {
                let cells: Vec<String> = row
                    .iter()
                    .map(|&x| format_sig(x, DEFAULT_PRECISION))
                    .collect();
                text += &(cells.join(",") + "\n");
            }
            fs::write(dir.join(&curve.file_name), text)?;
            println!(
                "{} ({} rows)",
                dir.join(&curve.file_name).display(),
                curve.rows.len()
            );
        }
    }
    Ok(())
}
