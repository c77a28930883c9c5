use std::path::Path;

use alphashape_core::experiment::{write_raw_csv, write_summary_csv, RAW_HEADER, SUMMARY_HEADER};
use alphashape_core::{
    emit_outputs, fit_loglog_slope, run_experiment, CellSummary, ConfigFile, Domain, Error,
    Estimator, ExperimentConfig, ExperimentResult, Statistic,
};

fn config(alphas: Vec<f64>, sizes: Vec<usize>, replicates: usize) -> ExperimentConfig {
    ExperimentConfig {
        domain: Domain::annulus(0.25, 1.0).unwrap(),
        alphas,
        sample_sizes: sizes,
        replicates,
        master_seed: 99,
        estimator: Estimator::Shape,
        output_path: None,
    }
}

fn raw(result: &ExperimentResult) -> String {
    let mut buf = Vec::new();
    write_raw_csv(result, &mut buf, Path::new("raw.csv")).unwrap();
    String::from_utf8(buf).unwrap()
}

#[test]
fn empty_result_writes_headers_only() {
    let empty = ExperimentResult::empty(Domain::disk(1.0).unwrap(), Estimator::Shape);
    assert_eq!(raw(&empty), RAW_HEADER.join(",") + "\n");
    let mut buf = Vec::new();
    write_summary_csv(&empty, &mut buf, Path::new("summary.csv")).unwrap();
    assert_eq!(
        String::from_utf8(buf).unwrap(),
        SUMMARY_HEADER.join(",") + "\n"
    );
}

#[test]
fn raw_rows_match_cells_times_replicates() {
    let result = run_experiment(&config(vec![0.2, 0.3], vec![400], 3)).unwrap();
    let text = raw(&result);
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let rows: Vec<csv::StringRecord> = reader.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 6);
    // The domain spec contains commas and must survive quoting.
    assert_eq!(&rows[0][0], "annulus:0.25,1");
    let parsed: Domain = rows[0][0].parse().unwrap();
    assert_eq!(parsed, result.domain);
}

#[test]
fn summary_round_trips_bit_for_bit() {
    let result = run_experiment(&config(vec![0.2], vec![5000], 50)).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let paths = emit_outputs(&result, dir.path()).unwrap();

    let mut reader = csv::Reader::from_path(&paths.summary).unwrap();
    let row = reader.records().next().unwrap().unwrap();
    let cell = &result.cells[0];
    assert_eq!(row[1].parse::<f64>().unwrap(), 0.2);
    assert_eq!(row[2].parse::<usize>().unwrap(), 5000);
    assert_eq!(row[3].parse::<usize>().unwrap(), 50);
    assert_eq!(
        row[4].parse::<f64>().unwrap().to_bits(),
        cell.error.to_bits()
    );
    assert_eq!(
        row[5].parse::<f64>().unwrap().to_bits(),
        cell.bias.to_bits()
    );
    assert_eq!(row[6].parse::<f64>().unwrap().to_bits(), cell.std.to_bits());
    assert!(cell.error > 0.0 && cell.error < 0.2);
    assert!(cell.bias.abs() <= cell.error);

    let mut reader = csv::Reader::from_path(&paths.raw).unwrap();
    let values: Vec<f64> = reader
        .records()
        .map(|r| r.unwrap()[4].parse().unwrap())
        .collect();
    assert_eq!(values, cell.values);

    let report = std::fs::read_to_string(&paths.report).unwrap();
    assert!(report.contains("Jarque-Bera"));
    assert!(report.contains("# alpha n error bias std"));
}

#[test]
fn identical_configs_give_identical_bytes() {
    let cfg = config(vec![0.2, 0.24], vec![500, 1500], 8);
    assert_eq!(
        raw(&run_experiment(&cfg).unwrap()),
        raw(&run_experiment(&cfg).unwrap())
    );
    let mut other = cfg.clone();
    other.master_seed += 1;
    assert_ne!(
        raw(&run_experiment(&cfg).unwrap()),
        raw(&run_experiment(&other).unwrap())
    );
}

#[test]
fn permuting_replicates_keeps_statistics() {
    let result = run_experiment(&config(vec![0.2], vec![2000], 12)).unwrap();
    let cell = &result.cells[0];
    let mut rotated = cell.values.clone();
    rotated.rotate_left(5);
    rotated.swap(0, 7);
    let again = CellSummary::from_values(cell.alpha, 0, cell.n, result.true_perimeter, rotated);
    assert_eq!(again.error.to_bits(), cell.error.to_bits());
    assert_eq!(again.bias.to_bits(), cell.bias.to_bits());
    assert_eq!(again.std.to_bits(), cell.std.to_bits());
}

#[test]
fn error_decreases_along_the_size_grid() {
    let sizes = vec![1000, 3000, 10000, 30000];
    let result = run_experiment(&config(vec![0.2], sizes.clone(), 50)).unwrap();
    let errors: Vec<f64> = sizes
        .iter()
        .map(|&n| result.cell(0.2, n).unwrap().error)
        .collect();
    assert!(errors.windows(2).all(|w| w[1] < w[0]), "{errors:?}");
    for c in &result.cells {
        assert!(c.std >= 0.0 && c.bias.abs() <= c.error);
        let m = c.values.len() as f64;
        let mean = c.values.iter().sum::<f64>() / m;
        let var = c.values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (m - 1.0);
        assert!((c.std * c.std / var - 1.0).abs() < 1e-12);
    }

    // The std exponent is only a conjecture; check the trend loosely.
    let fit = fit_loglog_slope(&result, 0.2, Statistic::Std).unwrap();
    assert!(fit.slope < -0.4 && fit.slope > -1.3, "{fit:?}");
    assert!(fit.ci_low <= fit.slope && fit.slope <= fit.ci_high);
    assert!((0.0..=1.0).contains(&fit.r_squared));
}

#[test]
fn hull_estimator_runs() {
    let mut cfg = config(vec![0.2], vec![3000], 4);
    let shape = run_experiment(&cfg).unwrap();
    cfg.estimator = Estimator::Hull;
    let hull = run_experiment(&cfg).unwrap();
    for (s, h) in shape.cells[0].values.iter().zip(&hull.cells[0].values) {
        assert!(h > s);
    }
}

#[test]
fn config_file_overrides_flags() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("exp.toml");
    std::fs::write(
        &path,
        "domain = \"disk:1\"\nalphas = [0.5]\nsizes = [100, 200, 400]\nreplicates = 2\nestimator = \"alpha_hull\"\noutput = \"out\"\n",
    )
    .unwrap();
    let mut cfg = config(vec![0.2], vec![1000], 10);
    ConfigFile::load(&path).unwrap().apply(&mut cfg).unwrap();
    assert_eq!(cfg.domain, Domain::disk(1.0).unwrap());
    assert_eq!(cfg.sample_sizes, vec![100, 200, 400]);
    assert_eq!(cfg.replicates, 2);
    assert_eq!(cfg.estimator, Estimator::Hull);
    assert_eq!(cfg.master_seed, 99);
    assert_eq!(cfg.output_path.as_deref(), Some(Path::new("out")));
}

#[test]
fn io_errors_carry_the_path() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("not_a_dir");
    std::fs::write(&blocker, "x").unwrap();
    let empty = ExperimentResult::empty(Domain::disk(1.0).unwrap(), Estimator::Shape);
    match emit_outputs(&empty, &blocker.join("sub")) {
        Err(Error::Io { path, .. }) => assert!(path.starts_with(&blocker)),
        other => panic!("unexpected {other:?}"),
    }
    match ConfigFile::load(&dir.path().join("missing.toml")) {
        Err(Error::Io { path, .. }) => assert!(path.ends_with("missing.toml")),
        other => panic!("unexpected {other:?}"),
    }
}
