mod common;

use alm_core::alm::{
    cog_extract, fit, fit_plane, ids_spread, morph_extract, project, stamp, stamp_all,
    thickened_skeleton, DataPlane, Dataset, Diffusion, Extraction, FitConfig, MorphParams, Range,
    Sample, Source,
};
use alm_core::datagen::{generate, FunctionKind, Shape};
use alm_core::Error;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::ids_oracle;

fn unit_plane(nx: usize, ny: usize) -> DataPlane {
    DataPlane::new(
        nx,
        ny,
        Range { lo: 0.0, hi: 1.0 },
        Range { lo: 0.0, hi: 1.0 },
    )
}

fn config(diffusion: Diffusion, extraction: Extraction) -> FitConfig {
    FitConfig {
        diffusion,
        extraction,
        ..FitConfig::default()
    }
}

#[test]
fn projection_preserves_sample_count() {
    let ds = generate(Shape::Chained, 777, 0.05, 4).unwrap();
    let plane = project(&ds, 0, 40, 30).unwrap();
    assert_eq!(plane.total(), 777);
}

#[test]
fn unit_stamp_is_a_pyramid() {
    let mut p = unit_plane(5, 5);
    stamp(
        &mut p,
        Source {
            col: 2,
            row: 2,
            count: 1,
        },
        1,
        1,
    );
    assert_eq!(p.get(2, 2), 2);
    for (c, r) in [
        (1, 1),
        (2, 1),
        (3, 1),
        (1, 2),
        (3, 2),
        (1, 3),
        (2, 3),
        (3, 3),
    ] {
        assert_eq!(p.get(c, r), 1);
    }
    assert_eq!(p.total(), 10);
}

#[test]
fn radius_zero_scales_by_height() {
    let mut p = unit_plane(4, 4);
    p.add(1, 2, 3);
    let spread = ids_spread(&p, 0, 5);
    assert_eq!(spread.get(1, 2), 15);
    assert_eq!(spread.total(), 15);
}

#[test]
fn circle_cog_has_one_delegate_per_column() {
    let ds = generate(Shape::Circle { radius: 1.0 }, 400, 0.0, 1).unwrap();
    let fitted = fit_plane(
        project(&ds, 0, 64, 64).unwrap(),
        &config(Diffusion::Ids, Extraction::Cog),
    )
    .unwrap();
    assert!(fitted.path.columns().iter().all(|c| c.len() <= 1));
    // the two arcs average out near the center height
    let middle = &fitted.path.columns()[32][0];
    assert!(middle.y.abs() < 0.1, "{}", middle.y);
}

#[test]
fn circle_morph_keeps_both_arcs() {
    let ds = generate(Shape::Circle { radius: 1.0 }, 400, 0.0, 1).unwrap();
    let fitted = fit_plane(
        project(&ds, 0, 64, 64).unwrap(),
        &config(Diffusion::Thicken, Extraction::Thin),
    )
    .unwrap();
    let two = (8..56)
        .filter(|&c| fitted.path.columns()[c].len() == 2)
        .count();
    assert!(two >= 40, "{two}");
    let col = &fitted.path.columns()[32];
    assert_eq!(col.len(), 2);
    // branches are ordered top to bottom
    assert!(col[0].y > 0.9 && col[1].y < -0.9, "{col:?}");
    assert_eq!((col[0].branch, col[1].branch), (0, 1));
}

#[test]
fn morph_delegates_lie_in_the_thickened_band() {
    let ds = generate(Shape::Chained, 1200, 0.02, 8).unwrap();
    let plane = project(&ds, 0, 64, 64).unwrap();
    let params = MorphParams::default();
    let (thickened, _) = thickened_skeleton(&plane, &params).unwrap();
    let path = morph_extract(&plane, &params).unwrap();
    for (col, delegates) in path.columns().iter().enumerate() {
        for d in delegates {
            let row = plane.row_of(d.y);
            assert!(thickened.get(row, col), "column {col} delegate {}", d.y);
        }
    }
}

#[test]
fn monotone_data_gives_one_morph_delegate_per_column() {
    let ds = generate(Shape::Function(FunctionKind::Linear), 2000, 0.0, 3).unwrap();
    let plane = project(&ds, 0, 32, 32).unwrap();
    let morph = morph_extract(&plane, &MorphParams::default()).unwrap();
    let cog = cog_extract(&plane);
    let h = plane.cell_height();
    for (m, c) in morph.columns().iter().zip(cog.columns()) {
        assert_eq!(m.len(), c.len());
        if let (Some(m), Some(c)) = (m.first(), c.first()) {
            assert!((m.y - c.y).abs() <= h + 1e-9, "{} vs {}", m.y, c.y);
        }
    }
}

#[test]
fn empty_plane_gives_empty_paths() {
    let p = unit_plane(16, 16);
    assert_eq!(cog_extract(&p).delegate_count(), 0);
    assert_eq!(
        morph_extract(&p, &MorphParams::default())
            .unwrap()
            .delegate_count(),
        0
    );
}

#[test]
fn fit_tracks_the_diagonal_and_predicts() {
    let ds = generate(Shape::Function(FunctionKind::Linear), 500, 0.0, 2).unwrap();
    let model = fit(&ds, &FitConfig::default()).unwrap();
    let path = &model.paths()[0];
    let h = path.y_range().width() / 64.0;
    for (col, delegates) in path.columns().iter().enumerate() {
        if let Some(d) = delegates.first() {
            assert!((d.y - path.x_center(col)).abs() <= 1.5 * h, "column {col}");
        }
    }
    let y = model.predict(&[0.5]).unwrap();
    assert!((y - 0.5).abs() <= h, "{y}");
}

#[test]
fn every_configuration_fits() {
    let ds = generate(Shape::Function(FunctionKind::Quadratic), 600, 0.01, 6).unwrap();
    for diffusion in [Diffusion::Ids, Diffusion::Thicken] {
        for extraction in [Extraction::Cog, Extraction::Thin] {
            let model = fit(&ds, &config(diffusion, extraction)).unwrap();
            let c = model.confidences()[0];
            assert!(c > 0.0 && c <= 1.0);
            let y = model.predict(&[0.0]).unwrap();
            assert!(y.abs() < 0.2, "{diffusion:?}/{extraction:?}: {y}");
        }
    }
}

#[test]
fn informative_input_has_higher_confidence() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let samples = (0..2000)
        .map(|_| {
            let x1: f64 = rng.random();
            let x2: f64 = rng.random();
            Sample {
                inputs: vec![x1, x2],
                output: x1,
            }
        })
        .collect();
    let ds = Dataset::new(2, samples).unwrap();
    let model = fit(&ds, &FitConfig::default()).unwrap();
    let c = model.confidences();
    assert!(c[0] > c[1], "{c:?}");
}

#[test]
fn constant_output_gives_flat_paths() {
    let ds = Dataset::from_pairs((0..50).map(|i| (i as f64 / 10.0, 2.5))).unwrap();
    for extraction in [Extraction::Cog, Extraction::Thin] {
        let diffusion = match extraction {
            Extraction::Cog => Diffusion::Ids,
            Extraction::Thin => Diffusion::Thicken,
        };
        let model = fit(&ds, &config(diffusion, extraction)).unwrap();
        let path = &model.paths()[0];
        let cell = path.y_range().width() / 64.0;
        let ys: Vec<f64> = path.columns().iter().flatten().map(|d| d.y).collect();
        assert!(!ys.is_empty());
        // flat up to binning: within one cell of the output
        assert!(ys.iter().all(|&y| (y - 2.5).abs() <= cell), "{ys:?}");
        if extraction == Extraction::Cog {
            assert!(ys.iter().all(|&y| (y - ys[0]).abs() < 1e-12), "{ys:?}");
        }
        assert!((model.predict(&[1.3]).unwrap() - 2.5).abs() <= cell);
    }
}

#[test]
fn empty_dataset_is_rejected() {
    let ds = Dataset::new(1, Vec::new()).unwrap();
    assert!(matches!(
        fit(&ds, &FitConfig::default()),
        Err(Error::EmptyDataset)
    ));
    assert!(matches!(project(&ds, 0, 8, 8), Err(Error::EmptyDataset)));
}

#[test]
fn out_of_range_inputs_are_clamped() {
    let ds = generate(Shape::Function(FunctionKind::Linear), 400, 0.0, 2).unwrap();
    let model = fit(&ds, &FitConfig::default()).unwrap();
    let lo = model.predict(&[-5.0]).unwrap();
    let hi = model.predict(&[5.0]).unwrap();
    assert!(lo < 0.05 && hi > 0.95, "{lo} {hi}");
}

proptest! {
    #[test]
    fn ids_matches_formula_and_ignores_order(
        nx in 2usize..20,
        ny in 2usize..20,
        radius in 0usize..4,
        height in 1u64..4,
        raw in proptest::collection::vec((0usize..100, 0usize..100, 1u64..5), 0..25),
        seed in any::<u64>(),
    ) {
        let template = unit_plane(nx, ny);
        let sources: Vec<Source> = raw
            .into_iter()
            .map(|(c, r, count)| Source { col: c % nx, row: r % ny, count })
            .collect();
        let mut forward = template.clone();
        stamp_all(&mut forward, &sources, radius, height);
        let mut shuffled = sources.clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for i in (1..shuffled.len()).rev() {
            shuffled.swap(i, rng.random_range(0..=i));
        }
        let mut backward = template.clone();
        stamp_all(&mut backward, &shuffled, radius, height);
        prop_assert_eq!(&forward, &backward);
        prop_assert_eq!(&forward, &ids_oracle(&template, &sources, radius, height));
    }

    #[test]
    fn cog_has_at_most_one_delegate(cells in proptest::collection::vec(0u64..4, 64)) {
        let mut p = unit_plane(8, 8);
        for (i, v) in cells.into_iter().enumerate() {
            p.set(i % 8, i / 8, v);
        }
        let path = cog_extract(&p);
        for (col, ds) in path.columns().iter().enumerate() {
            let mass: u64 = (0..8).map(|r| p.get(col, r)).sum();
            prop_assert_eq!(ds.len(), usize::from(mass > 0));
        }
    }
}
