use num_traits::{ToPrimitive, Zero};
use oscint::coefficients::{
    branch_gap, cancellation_profile, classical_coefficients, closed_form_b, coefficients,
    coefficients_with, precision_budget, series_coefficients, taylor_b, CoeffOptions, MethodId,
    Rational, A_PATTERN, ERROR_CONSTANT, TAYLOR_RADIUS,
};
use oscint::Error;
use proptest::prelude::*;

// Solutions of the defining linear system (moment rows plus vanishing
// phase-lag derivatives), solved independently with 400-digit arithmetic.
const ORACLE_V: [f64; 6] = [0.1, 0.7, 1.3, 2.9, 4.4, 5.5];
/// b_1..b_7 for PF-D0..PF-D6 at each of ORACLE_V.
const ORACLE_B: [[[f64; 7]; 6]; 7] = [
    [
        [
            1.8226946802507369212,
            -5.7306141750238342357,
            23.446915667933116515,
            -59.414995178200041529,
            120.1535917020689206,
            -176.46504833816917949,
            203.37491128228056243,
        ],
        [
            1.7978073718605138773,
            -5.4319664743411577092,
            21.804353314178395619,
            -53.939787332350971876,
            107.83437404890851388,
            -156.75430009311252874,
            180.37903832971446989,
        ],
        [
            1.7423211790639237467,
            -4.7661321607820761419,
            18.142264589603446999,
            -41.732824917101143143,
            80.368708614596399231,
            -112.8092353982131453,
            129.10979618566518921,
        ],
        [
            1.5885059773111109436,
            -2.9203497397483225052,
            7.9904612739178019975,
            -7.8934805314823264704,
            4.2301837469540617188,
            9.0124043900145947244,
            -13.015450233933840817,
        ],
        [
            1.6715068421806109879,
            -3.9163601181823230364,
            13.468518355304804919,
            -26.153670802772336209,
            45.31561185735658363,
            -56.724280586629440333,
            63.677348905484200083,
        ],
        [
            25.697085951320052071,
            -292.22330942785561603,
            1599.1567395585079164,
            -5311.7810748134493745,
            11937.97727088137992,
            -19084.982935025066778,
            22263.312445750327761,
        ],
    ],
    [
        [
            1.8221593578100633249,
            -5.7241956545006242193,
            23.411637874497390547,
            -59.297464935671141583,
            119.88924894572026706,
            -176.04219620577905032,
            202.88162123584619037,
        ],
        [
            1.7721430212651749965,
            -5.1360646122986189965,
            20.231209625901308056,
            -48.836795730945171663,
            96.578961916399110721,
            -138.96290689292498511,
            159.70690534520636398,
        ],
        [
            1.6586712084747404846,
            -3.8848799165960681004,
            13.846840559559262737,
            -28.844464517269425143,
            53.667661519053616924,
            -72.293413297260133468,
            82.699168888076013132,
        ],
        [
            1.3107252463146716951,
            -0.68196936754835929735,
            0.60681702572588934022,
            3.9438022986554583494,
            -1.8726701254064333503,
            -0.93282060984015310954,
            6.2522310641978527449,
        ],
        [
            1.5123883058340433736,
            -2.4229794676009591153,
            7.1271128122058168822,
            -9.8694731575125963466,
            16.476950635099308645,
            -18.071174771411854474,
            21.494351286772482071,
        ],
        [
            -141.72714117432565511,
            1619.3159403246414424,
            -8475.3274931815944801,
            27131.732483842291957,
            -59230.838065683073806,
            93029.195039883533483,
            -107853.70152802294588,
        ],
    ],
    [
        [
            1.821623932805925029,
            -5.7177812540302714168,
            23.376406766564000694,
            -59.180152488202881693,
            119.62549602149538575,
            -175.62038352076946781,
            202.3895810842746189,
        ],
        [
            1.7462287796197494397,
            -4.8494694580875902894,
            18.758894985640897375,
            -44.186713941960228605,
            86.516001649915914099,
            -123.23673383973051288,
            141.50358364920354171,
        ],
        [
            1.5719318134960291674,
            -3.0981540105567347787,
            10.477345974625927637,
            -19.709102311563743078,
            36.016721154284248754,
            -46.541527762350163397,
            53.565570284128871391,
        ],
        [
            0.88384143226139526231,
            1.0751558455769390853,
            -0.54593052719270225555,
            -0.52261256341429180631,
            4.9473099247130058082,
            1.868640772792799204,
            -4.4128097694742905958,
        ],
        [
            1.4655044271415235807,
            -2.1055442660379695183,
            6.1639696908217672984,
            -8.0235658275826187687,
            13.715416267765533256,
            -14.475973735445785158,
            17.520386886675098621,
        ],
        [
            253.32308472216450408,
            -2660.9264845263876604,
            13128.501422918811458,
            -40136.039275581834779,
            84831.061692273556275,
            -130685.46832573025938,
            150550.09577184789917,
        ],
    ],
    [
        [
            1.8210884051709732515,
            -5.7113709748561697007,
            23.341222306719652113,
            -59.063057485961244415,
            119.36233164789738452,
            -175.19960767353690003,
            201.89878754913260852,
        ],
        [
            1.7200561761322762206,
            -4.5723263693730190941,
            17.383416799380988602,
            -39.954287762574850157,
            77.521977229257947102,
            -109.33118428372375455,
            125.46469642180082376,
        ],
        [
            1.4816857053619640639,
            -2.4118329924696025689,
            7.9063584142843051525,
            -13.338628296433627793,
            24.373418720056232111,
            -30.075948755495136159,
            35.129894409391730387,
        ],
        [
            -1.4990267758481453163,
            1.4903730353981897302,
            12.896727003714360157,
            -1.6713278392804215154,
            -27.57324667779223568,
            2.6096099175081286457,
            38.493782672600247958,
        ],
        [
            1.0578475132670512805,
            -0.41132099863665787556,
            2.8743991027726758762,
            -2.6341500510564285231,
            5.2631459563442296037,
            -4.2184378552626082699,
            7.1370326651434758161,
        ],
        [
            14.871017035909159817,
            -216.311440489838633,
            1315.9040699173477643,
            -4537.3234395497592976,
            10297.428641339737034,
            -16468.922662468775951,
            19199.707628430759846,
        ],
    ],
    [
        [
            1.820552774837794177,
            -5.7049648182229539147,
            23.306084457536193165,
            -58.94617957947724026,
            119.09975454598021361,
            -174.77986606112485856,
            201.40923736094170357,
        ],
        [
            1.6936163129644945282,
            -4.3047883344879024639,
            16.100698584818217912,
            -36.106110991946623363,
            69.485271134982807776,
            -97.031075207360682181,
            111.32477700205937558,
        ],
        [
            1.3874288076957240252,
            -1.8330965240805878797,
            5.9950832611825924669,
            -8.9328941635246794978,
            16.690491215312421335,
            -19.490606876813750578,
            23.367188560456560257,
        ],
        [
            -65.850330886415574009,
            -240.96380383577091815,
            -87.206418941416805797,
            725.74164328609552397,
            951.89946063159431335,
            -482.34625456666779169,
            -1591.5485913748374954,
        ],
        [
            0.40069804934577279023,
            0.60156781103480425505,
            1.2760591531300878064,
            1.3157463391124031015,
            1.173351416370070279,
            0.50027244677542591049,
            0.4646095684628717146,
        ],
        [
            -404.60850510086392036,
            3839.7863142370343393,
            -17447.641957936573266,
            50257.42210815923025,
            -102008.0093780769883,
            153515.67486023196252,
            -175494.24688302760324,
        ],
    ],
    [
        [
            1.8200170417389088777,
            -5.6985627853765015441,
            23.270993181570595866,
            -58.829518419647094597,
            118.837763439344926,
            -174.36115608720695415,
            200.92092725915223909,
        ],
        [
            1.6668998383851100952,
            -4.0470165167908653707,
            14.906574051625188431,
            -32.6106769573523226,
            62.30526061640715939,
            -86.147064060027249642,
            98.852046055505959393,
        ],
        [
            1.2885472570628070408,
            -1.3708264331458726822,
            4.5897587384495618169,
            -5.9040855295190085878,
            11.615792157381524686,
            -12.630190526705297998,
            15.822008672952571448,
        ],
        [
            -2768.1099336370286229,
            -21074.254854780511046,
            -65728.407939120692706,
            -97521.798059630479155,
            -33657.937530144034571,
            118598.48628577113302,
            204315.04406308322617,
        ],
        [
            0.20095915965995155573,
            0.38718232827198262632,
            0.55071090677968934145,
            1.2892495557946876468,
            0.85475586868707851311,
            1.7602986020850880564,
            0.91368715744304452042,
        ],
        [
            281.1141652061696296,
            -2391.1683263058883749,
            10160.862098750783275,
            -27971.714046372130677,
            55138.745065719821437,
            -81611.282911494928708,
            92797.887908992346836,
        ],
    ],
    [
        [
            1.8194812058067732367,
            -5.6921648775639343881,
            23.235948441364936306,
            -58.713073657732434866,
            118.57635705413593542,
            -173.94347516206999245,
            200.43385399211743294,
        ],
        [
            1.6398969179764870176,
            -3.7991808442900626512,
            13.796780639960269507,
            -29.438434637084815876,
            55.891379955000131341,
            -76.512542672303951423,
            87.843909036421431265,
        ],
        [
            1.1842872787808022011,
            -1.0361533683915380712,
            3.5165756047876067886,
            -3.9114170090084830435,
            8.1332795806161543016,
            -8.298132761822247931,
            10.792385111385322877,
        ],
        [
            -132707.75507212976188,
            -1535065.7679410982847,
            -8195478.3867617939548,
            -26698549.672876356268,
            -59100760.709224566325,
            -93644600.270709702433,
            -108898536.45941237708,
        ],
        [
            0.38874492870396868653,
            1.0797352003688122031,
            2.7416468300103723328,
            5.6242010874172077867,
            8.3305053199101288567,
            11.401246186272805132,
            11.86901312252708598,
        ],
        [
            -0.096362434853776482273,
            0.25648751439388830273,
            -0.053482318046658740626,
            -1.199725221509952005,
            3.6690068773478865506,
            -6.3076085027324530561,
            7.4600208639399840716,
        ],
    ],
];

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}

#[test]
fn fitted_weights_match_independent_solutions() {
    for (i, m) in MethodId::FITTED.into_iter().enumerate() {
        for (k, v) in ORACLE_V.into_iter().enumerate() {
            let b = coefficients(m, v).unwrap().b_half();
            for j in 0..7 {
                let want = ORACLE_B[i][k][j];
                assert!(
                    rel(b[j], want) < 1e-13,
                    "{m} v={v} b{}: {} vs {want}",
                    j + 1,
                    b[j]
                );
            }
        }
    }
}

#[test]
fn classical_weights_are_exact_and_symmetric() {
    let c = classical_coefficients();
    let b1 = &c.b[1];
    assert_eq!(b1.numer().to_string(), "433489274083");
    assert_eq!(b1.denom().to_string(), "237758976000");
    assert!(c.b[0].is_zero() && c.b[14].is_zero());
    for j in 0..15 {
        assert_eq!(c.a[j], c.a[14 - j]);
        assert_eq!(c.b[j], c.b[14 - j]);
        assert_eq!(c.a[j].to_i64(), Some(A_PATTERN[j]));
    }
    // consistency: the b weights sum to the second moment of the a weights / 2
    let sum_b: Rational = c.b.iter().sum();
    let m2: Rational =
        c.a.iter()
            .enumerate()
            .map(|(j, a)| a * Rational::from_integer(((j * j) as i64).into()))
            .sum();
    assert_eq!(sum_b * Rational::from_integer(2.into()), m2);
}

#[test]
fn classical_ignores_v() {
    let a = coefficients(MethodId::Classical, 0.0).unwrap();
    let b = coefficients(MethodId::Classical, 3.0).unwrap();
    assert_eq!(a.b, b.b);
    assert_eq!(a.a, b.a);
}

#[test]
fn every_set_keeps_the_a_pattern_and_symmetry() {
    for m in MethodId::FITTED {
        let c = coefficients(m, 0.9).unwrap();
        for j in 0..15 {
            assert_eq!(c.a[j], A_PATTERN[j] as f64);
            assert_eq!(c.b[j], c.b[14 - j]);
        }
        assert_eq!(c.b[0], 0.0);
    }
}

#[test]
fn second_order_term_of_b1_scales_with_the_derivative_count() {
    let c16 = Rational::new(ERROR_CONSTANT.0.into(), ERROR_CONSTANT.1.into());
    for m in MethodId::FITTED {
        let n = m.derivative_count() as i64 + 1;
        let s = series_coefficients(m);
        assert_eq!(
            s[0][1],
            -c16.clone() * Rational::from_integer(n.into()),
            "{m}"
        );
    }
}

#[test]
fn series_constant_terms_are_classical() {
    let c = classical_coefficients();
    for m in MethodId::FITTED {
        let s = series_coefficients(m);
        for j in 0..7 {
            assert_eq!(s[j][0], c.b[j + 1], "{m} b{}", j + 1);
        }
    }
}

#[test]
fn branches_meet_near_the_switch() {
    for m in MethodId::FITTED {
        assert!(branch_gap(m, 0.05).unwrap() < 1e-12, "{m}");
        assert!(branch_gap(m, 0.2).unwrap() < 1e-9, "{m}");
    }
}

#[test]
fn invalid_frequencies_are_rejected() {
    for v in [0.0, -0.3, f64::NAN, 6.5] {
        assert!(matches!(
            coefficients(MethodId::PFD2, v),
            Err(Error::InvalidFrequency { .. })
        ));
    }
    assert!(matches!(
        taylor_b(MethodId::PFD0, TAYLOR_RADIUS * 1.5),
        Err(Error::OutOfValidityRange { .. })
    ));
}

#[test]
fn poles_are_reported_not_evaluated() {
    let pi = std::f64::consts::PI;
    for (m, pole) in [
        (MethodId::PFD0, 2.0 * pi),
        (MethodId::PFD1, pi),
        (MethodId::PFD5, pi),
        (MethodId::PFD6, pi),
    ] {
        let opts = CoeffOptions {
            v_max: 7.0,
            ..CoeffOptions::default()
        };
        let r = coefficients_with(m, pole + 1e-5, &opts);
        assert!(matches!(r, Err(Error::PoleProximity { .. })), "{m}: {r:?}");
    }
    assert_eq!(
        cancellation_profile(MethodId::PFD0, 6.0).pole_locations,
        Vec::<f64>::new()
    );
    let p6 = cancellation_profile(MethodId::PFD6, 10.0).pole_locations;
    assert!((p6[0] - pi).abs() < 1e-12 && (p6[1] - 2.0 * pi).abs() < 1e-12);
}

#[test]
fn precision_floor_does_not_change_values() {
    let opts = CoeffOptions {
        precision_floor: 1024,
        ..CoeffOptions::default()
    };
    for m in MethodId::FITTED {
        let a = coefficients(m, 0.7).unwrap();
        let b = coefficients_with(m, 0.7, &opts).unwrap();
        assert!(b.precision_bits_used >= 1024);
        for j in 0..15 {
            assert!(rel(a.b[j], b.b[j]) <= 4.0 * f64::EPSILON, "{m}");
        }
    }
}

#[test]
fn precision_budget_grows_as_v_shrinks() {
    for m in MethodId::FITTED {
        let a = precision_budget(m, 1.0, 64);
        let b = precision_budget(m, 0.01, 64);
        assert!(b > a, "{m}");
        assert_eq!(b % 64, 0);
    }
}

#[test]
fn closed_form_error_estimate_is_small() {
    for m in MethodId::FITTED {
        let cf = closed_form_b(m, 1.7, precision_budget(m, 1.7, 64)).unwrap();
        assert!(cf.rel_error <= 1e-12, "{m} {}", cf.rel_error);
    }
}

fn away_from_poles(m: MethodId, v: f64) -> bool {
    cancellation_profile(m, 6.0)
        .pole_locations
        .iter()
        .all(|p| (v - p).abs() > 0.05)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn fitted_numerator_vanishes(i in 0usize..7, v in 0.06f64..5.9) {
        let m = MethodId::fitted(i).unwrap();
        prop_assume!(away_from_poles(m, v));
        let c = coefficients(m, v).unwrap();
        let scale: f64 = c.b.iter().map(|x| x.abs()).sum::<f64>() * v * v + 8.0;
        let n = oscint::phaselag::phase_lag_numerator(&c, v);
        prop_assert!(n.abs() <= 1e-14 * scale, "{} {} {}", m, v, n);
    }

    #[test]
    fn taylor_and_closed_agree_below_the_switch(i in 0usize..7, v in 1e-3f64..0.05) {
        let m = MethodId::fitted(i).unwrap();
        let t = taylor_b(m, v).unwrap();
        let c = closed_form_b(m, v, precision_budget(m, v, 64)).unwrap();
        for j in 0..7 {
            prop_assert!(rel(t[j], c.b[j]) < 1e-13, "{} v={} b{}", m, v, j + 1);
        }
    }

    #[test]
    fn coefficients_are_continuous(i in 0usize..7, v in 0.06f64..5.8) {
        let m = MethodId::fitted(i).unwrap();
        prop_assume!(away_from_poles(m, v) && away_from_poles(m, v + 1e-7));
        let a = coefficients(m, v).unwrap();
        let b = coefficients(m, v + 1e-7).unwrap();
        for j in 1..8 {
            prop_assert!((a.b[j] - b.b[j]).abs() <= 1e-3 * a.b[j].abs().max(1.0));
        }
    }
}
