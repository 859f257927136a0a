//! Generate the bundled synthetic benchmark datasets as .ts train/test
//! pairs. Usage: `cargo run --example make_synth [out_dir]` (default
//! `data/`).

use std::path::PathBuf;

use cif_core::synth;
use cif_core::tsdata::{write_ts_file, TimeSeriesDataset};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out_dir = PathBuf::from(
        std::env::args()
            .nth(1)
            .unwrap_or_else(|| "data".to_string()),
    );
    std::fs::create_dir_all(&out_dir)?;

    let pairs: Vec<(&str, TimeSeriesDataset, TimeSeriesDataset)> = vec![
        (
            "NoiseVsAr1",
            synth::white_noise_vs_ar1(40, 128, 0.8, 1001),
            synth::white_noise_vs_ar1(60, 128, 0.8, 1002),
        ),
        (
            "SineWavelength",
            synth::sine_wavelength_pair(40, 128, 8.0, 16.0, 0.4, 2001),
            synth::sine_wavelength_pair(60, 128, 8.0, 16.0, 0.4, 2002),
        ),
        (
            "GaussVsLaplace",
            synth::gaussian_vs_laplace(40, 128, 3001),
            synth::gaussian_vs_laplace(60, 128, 3002),
        ),
    ];

    for (name, mut train, mut test) in pairs {
        train.name = name.to_string();
        test.name = name.to_string();
        let train_path = out_dir.join(format!("{name}_TRAIN.ts"));
        let test_path = out_dir.join(format!("{name}_TEST.ts"));
        write_ts_file(&train, &train_path)?;
        write_ts_file(&test, &test_path)?;
        println!(
            "{name}: {} train / {} test instances, length {}",
            train.n_instances(),
            test.n_instances(),
            train.series_len()
        );
    }
    Ok(())
}
