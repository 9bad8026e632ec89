//! Kruskal–Wallis, Dunn and Holm outputs frozen from an independent
//! reference implementation (`tools/stats_oracle.py`).

pub struct Case {
    pub name: &'static str,
    pub groups: &'static [&'static [f64]],
    pub h: f64,
    pub p: f64,
    /// (i, j, z, raw p, Holm-adjusted p over all pairs)
    pub pairs: &'static [(usize, usize, f64, f64, f64)],
}

pub const CASES: &[Case] = &[
    Case {
        name: "separated",
        groups: &[&[1.0, 2.0, 3.0], &[4.0, 5.0, 6.0], &[7.0, 8.0, 9.0]],
        h: 7.200000000000003,
        p: 0.02732372244729252,
        pairs: &[
            (0, 1, -1.3416407864998738, 0.17971249487899976, 0.3594249897579995),
            (0, 2, -2.6832815729997477, 0.007290358091535638, 0.021871074274606914),
            (1, 2, -1.3416407864998738, 0.17971249487899976, 0.3594249897579995),
        ],
    },
    Case {
        name: "ties",
        groups: &[&[1.0, 1.0, 2.0, 3.0], &[2.0, 3.0, 3.0, 4.0, 5.0], &[5.0, 5.0, 6.0]],
        h: 7.799305555555559,
        p: 0.020248941107635362,
        pairs: &[
            (0, 1, -1.5046191626044947, 0.1324220167544126, 0.250306522996218),
            (0, 2, -2.7878264585531456, 0.005306296059336075, 0.015918888178008225),
            (1, 2, -1.5334977463838186, 0.125153261498109, 0.250306522996218),
        ],
    },
    Case {
        name: "two_groups",
        groups: &[&[0.5, 1.7, 2.2, 3.1], &[2.0, 2.5, 4.0, 6.1, 7.3]],
        h: 2.9399999999999977,
        p: 0.08641073297370006,
        pairs: &[(0, 1, -1.7146428199482249, 0.08641073297369996, 0.08641073297369996)],
    },
    Case {
        name: "four_groups",
        groups: &[
            &[3.2, 1.1, 4.4, 4.4, 0.9],
            &[2.5, 2.5, 6.0, 7.1],
            &[8.8, 9.1, 7.7, 6.0, 10.2, 9.9],
            &[0.1, 0.3, 1.1, 2.5],
        ],
        h: 13.6072374227714,
        p: 0.0034915769138397336,
        pairs: &[
            (0, 1, -0.6975243070103406, 0.4854747330618645, 0.6063216786452528),
            (0, 2, -2.5757792083268596, 0.010001448821548168, 0.050007244107740836),
            (0, 3, 1.0296787389200266, 0.3031608393226264, 0.6063216786452528),
            (1, 2, -1.6914065549586548, 0.09075918122406323, 0.36303672489625294),
            (1, 3, 1.6385686820161138, 0.10130311918125691, 0.36303672489625294),
            (2, 3, 3.486368613282125, 0.0004896258300807563, 0.002937754980484538),
        ],
    },
    Case {
        name: "overlap",
        groups: &[
            &[10.0, 12.5, 11.1, 9.8, 13.3, 10.4],
            &[11.9, 14.2, 12.2, 15.0, 10.4, 13.7],
            &[9.1, 8.7, 10.0, 11.5, 9.9, 8.2],
            &[12.0, 16.4, 14.9, 13.1, 15.5, 11.0],
            &[10.0, 10.0, 12.5, 9.0, 11.1, 13.0],
        ],
        h: 14.554997768853193,
        p: 0.005719018788603443,
        pairs: &[
            (0, 1, -1.3956495430027664, 0.16282005554582069, 0.6512802221832827),
            (0, 2, 1.5270047941089095, 0.12675981925726842, 0.6337990962863421),
            (0, 3, -1.8389735154859983, 0.06591908161186735, 0.4614335712830715),
            (0, 4, 0.2298716894357497, 0.818191475830961, 1.0),
            (1, 2, 2.922654337111676, 0.0034706157038189326, 0.031235541334370395),
            (1, 3, -0.4433239724832318, 0.6575314186303671, 1.0),
            (1, 4, 1.6255212324385162, 0.10405154345468016, 0.624309260728081),
            (2, 3, -3.3659783095949076, 0.0007627270565935703, 0.007627270565935703),
            (2, 4, -1.2971331046731598, 0.19458539277151599, 0.6512802221832827),
            (3, 4, 2.068845204921748, 0.038560614883180876, 0.308484919065447),
        ],
    },
];
