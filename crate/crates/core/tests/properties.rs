//! Property suite for the structural invariants of the synthesis pipeline:
//! mask construction, placement rules, sampling bounds, the lobe's energy
//! bookkeeping, and the deviation-angle geometry.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thzscat_core::dists::gev::Gev;
use thzscat_core::dsmodel::{hemisphere_power_sum, scattered_power_reference};
use thzscat_core::presets::{self, CATALOG};
use thzscat_core::reconstruct::{
    main_lobe_mask, place_high, place_low, reconstruct_field, MainLobeSpec, PerturbClass,
};
use thzscat_core::sphgeom::{unit_dir, Grid, SpecularFrame};

proptest! {
    /// The mask is exactly the brute-force enumeration of the open lobe
    /// rectangle: zenith within half the vertical width of the specular row,
    /// azimuth within half the horizontal width of the specular meridian.
    #[test]
    fn mask_matches_brute_force_enumeration(
        theta_r in 5.0..85.0f64,
        v in 2.0..40.0f64,
        h in 2.0..40.0f64,
        res in prop::sample::select(vec![1.0f64, 2.0, 3.0, 5.0]),
    ) {
        prop_assume!(v >= 2.0 * res && h >= 2.0 * res);
        let grid = Grid::new(res).unwrap();
        let frame = SpecularFrame::new(theta_r);
        let mask = main_lobe_mask(&grid, frame, &MainLobeSpec { v_main_deg: v, h_main_deg: h })
            .unwrap();
        let got: Vec<usize> = mask.cells().iter().map(|c| c.cell).collect();
        let brute: Vec<usize> = grid
            .iter()
            .enumerate()
            .filter(|(_, (theta, phi))| {
                let dphi = phi.min(360.0 - phi);
                (theta - theta_r).abs() < v / 2.0 && dphi < h / 2.0
            })
            .map(|(i, _)| i)
            .collect();
        prop_assert_eq!(got, brute);
    }

    /// Synthesis only rewrites cells inside the main-lobe mask, clamped cells
    /// are a subset of the perturbed cells, and the whole synthesis is a pure
    /// function of the seed.
    #[test]
    fn perturbations_stay_inside_the_mask_and_repeat_by_seed(
        seed in 0u64..1000,
        preset_i in 0usize..9,
    ) {
        let p = &CATALOG[preset_i];
        let grid = Grid::new(3.0).unwrap();
        let synth = reconstruct_field(
            grid,
            &p.ds(),
            &p.geometry(),
            &p.law(),
            &p.widths(),
            35.6,
            seed,
        )
        .unwrap();
        for a in synth.placement.assignments() {
            prop_assert!(synth.mask.contains(a.cell));
        }
        for &c in &synth.clamped_cells {
            prop_assert!(synth.mask.contains(c));
        }
        prop_assert!(synth.placement.is_complete());

        let again = reconstruct_field(
            grid,
            &p.ds(),
            &p.geometry(),
            &p.law(),
            &p.widths(),
            35.6,
            seed,
        )
        .unwrap();
        prop_assert_eq!(&synth.field.values_db, &again.field.values_db);
        prop_assert_eq!(synth.placement.assignments(), again.placement.assignments());

        // Outside the mask the field is the deterministic lobe.
        let baseline = thzscat_core::dsmodel::ds_field(grid, &p.ds(), &p.geometry(), 35.6);
        for i in 0..grid.len() {
            if !synth.mask.contains(i) {
                prop_assert_eq!(synth.field.values_db[i], baseline.values_db[i]);
            }
        }
    }

    /// Weak components fill the free cells outward from the specular
    /// direction in descending magnitude: the documented deterministic order.
    #[test]
    fn weak_placement_order_is_the_documented_sort(
        theta_r in 10.0..80.0f64,
        seed in 0u64..500,
        magnitudes in prop::collection::vec(-50.0..50.0f64, 1..80),
    ) {
        let grid = Grid::new(3.0).unwrap();
        let frame = SpecularFrame::new(theta_r);
        let mask = main_lobe_mask(
            &grid,
            frame,
            &MainLobeSpec { v_main_deg: 30.0, h_main_deg: 30.0 },
        )
        .unwrap();
        prop_assume!(magnitudes.len() <= mask.len());
        let mut values = magnitudes.clone();
        values.truncate(mask.len());
        while values.len() < mask.len() {
            values.push(0.0);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let empty = place_high(&[], &mask, &Gev::new(-0.3, 2.4, 4.5).unwrap(), &mut rng).unwrap();
        let map = place_low(&values, &mask, empty).unwrap();

        // Expected cell order: mask cells sorted by deviation angle, azimuth
        // distance, zenith, then index.
        let mut order: Vec<usize> = (0..mask.len()).collect();
        order.sort_by(|&a, &b| {
            let (ca, cb) = (&mask.cells()[a], &mask.cells()[b]);
            ca.psi_deg
                .total_cmp(&cb.psi_deg)
                .then(ca.abs_dphi_deg.total_cmp(&cb.abs_dphi_deg))
                .then(ca.theta_deg.total_cmp(&cb.theta_deg))
                .then(ca.cell.cmp(&cb.cell))
        });
        let placed = map.assignments();
        prop_assert_eq!(placed.len(), mask.len());
        for (a, &j) in placed.iter().zip(order.iter()) {
            prop_assert_eq!(a.cell, mask.cells()[j].cell);
            prop_assert_eq!(a.class, PerturbClass::Low);
        }
        for w in placed.windows(2) {
            prop_assert!(
                w[0].value.abs() >= w[1].value.abs(),
                "magnitudes must not increase outward: {} then {}",
                w[0].value,
                w[1].value
            );
        }
    }

    /// Draws from the bounded placement law always land inside the requested
    /// range, and the law's own finite endpoint is never exceeded.
    #[test]
    fn bounded_placement_draws_respect_their_bounds(
        shape in -0.9..0.9f64,
        scale in 0.5..10.0f64,
        location in -5.0..25.0f64,
        lo in 0.0..30.0f64,
        width in 0.0..40.0f64,
        seed in 0u64..500,
    ) {
        let gev = Gev::new(shape, scale, location).unwrap();
        let hi = lo + width;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..32 {
            let x = thzscat_core::reconstruct::draw_bounded_psi(&gev, lo, hi, &mut rng);
            prop_assert!(x >= lo && x <= hi, "draw {x} escaped [{lo}, {hi}]");
        }
        if shape < 0.0 {
            let endpoint = location + scale / (-shape);
            for _ in 0..256 {
                let x = gev.sample(&mut rng);
                prop_assert!(
                    x <= endpoint + 1e-9,
                    "sample {x} beyond the upper endpoint {endpoint}"
                );
            }
        }
    }

    /// Deviation angle: zero at the specular direction (up to the acos
    /// round-off floor near a unit cosine, about a microdegree), within
    /// [0, 180] everywhere, and symmetric across the incidence plane.
    #[test]
    fn deviation_angle_identities(
        theta_r in 0.0..90.0f64,
        theta in 0.0..90.0f64,
        phi in 0.0..360.0f64,
    ) {
        let frame = SpecularFrame::new(theta_r);
        let at_specular = frame.deviation_deg(unit_dir(theta_r, 0.0));
        prop_assert!(at_specular.abs() < 1e-5, "specular deviation {at_specular}");

        let psi = frame.deviation_deg(unit_dir(theta, phi));
        prop_assert!((0.0..=180.0).contains(&psi), "deviation {psi} out of range");

        let mirrored = frame.deviation_deg(unit_dir(theta, 360.0 - phi));
        prop_assert!(
            (psi - mirrored).abs() < 1e-9,
            "asymmetry across the incidence plane: {psi} vs {mirrored}"
        );

        let mix = frame.plane_mix(unit_dir(theta, phi));
        prop_assert!((0.0..=1.0).contains(&mix), "blend factor {mix} out of range");
    }
}

/// Quadrature of the lobe over the hemisphere matches the independent
/// incidence-plane reference integral within 1% at quarter-degree resolution,
/// for every cataloged parameter set.
#[test]
fn energy_balance_within_one_percent_at_quarter_degree() {
    for p in &CATALOG {
        let params = p.ds();
        let geometry = p.geometry();
        let quad = hemisphere_power_sum(&params, &geometry, 0.25);
        let reference = scattered_power_reference(&params, &geometry);
        let rel = (quad - reference).abs() / reference;
        assert!(
            rel < 0.01,
            "{}: hemisphere sum {quad} vs reference {reference} ({:.3}% off)",
            p.name,
            rel * 100.0
        );
    }
}

/// The synthesized strong components' deviation angles stay inside the
/// mask's attainable range for every preset.
#[test]
fn strong_placements_stay_in_the_attainable_range() {
    for p in &CATALOG {
        let grid = Grid::new(1.0).unwrap();
        let synth = reconstruct_field(
            grid,
            &p.ds(),
            &p.geometry(),
            &p.law(),
            &p.widths(),
            presets::DEFAULT_CALIBRATION_DB,
            7,
        )
        .unwrap();
        let (lo, hi) = synth.mask.psi_range_deg();
        for a in synth.placement.assignments() {
            if a.class == PerturbClass::High {
                let cell = synth
                    .mask
                    .cells()
                    .iter()
                    .find(|c| c.cell == a.cell)
                    .expect("strong cell is in the mask");
                assert!(
                    cell.psi_deg >= lo - 1e-9 && cell.psi_deg <= hi + 1e-9,
                    "{}: strong component at {} outside [{lo}, {hi}]",
                    p.name,
                    cell.psi_deg
                );
            }
        }
    }
}
