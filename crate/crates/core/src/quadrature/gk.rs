//! Gauss-Kronrod panel rules (QUADPACK 15- and 21-point node sets).

use crate::scalar::fl;
use crate::Real;

const XGK15: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_838_258_730,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];
const WG15: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];
const WGK15: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

const XGK21: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.000_000_000_000_000_000_000_000_000_000_000,
];
const WG21: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];
const WGK21: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

/// One Gauss-Kronrod panel. Non-finite integrand values are treated as zero;
/// the singular transforms guarantee those only occur on sets of negligible
/// panel weight at the very edge of a removed endpoint.
fn gk_panel<T: Real, F: Fn(T) -> T>(
    f: &F,
    a: T,
    b: T,
    xgk: &[f64],
    wg: &[f64],
    wgk: &[f64],
) -> (T, T) {
    let n = xgk.len();
    let half = fl::<T>(0.5);
    let center = half * (a + b);
    let half_len = half * (b - a);

    let guard = |v: T| if v.is_finite() { v } else { T::zero() };

    let f_center = guard(f(center));
    let mut res_gauss = T::zero();
    let mut res_kronrod = f_center * fl(wgk[n - 1]);
    if n % 2 == 0 {
        res_gauss = f_center * fl(wg[n / 2 - 1]);
    }

    let mut fv = vec![T::zero(); n - 1];
    for j in 0..(n - 1) {
        let abscissa = half_len * fl(xgk[j]);
        let f1 = guard(f(center - abscissa));
        let f2 = guard(f(center + abscissa));
        let fsum = f1 + f2;
        fv[j] = fsum;
        res_kronrod = res_kronrod + fl::<T>(wgk[j]) * fsum;
        if j % 2 == 1 {
            res_gauss = res_gauss + fl::<T>(wg[j / 2]) * fsum;
        }
    }

    let value = res_kronrod * half_len;
    let err = ((res_kronrod - res_gauss) * half_len).abs();
    (value, err)
}

/// 21-point panel: (value, error estimate). Uses 21 integrand evaluations.
pub(crate) fn gk21<T: Real, F: Fn(T) -> T>(f: &F, a: T, b: T) -> (T, T) {
    gk_panel(f, a, b, &XGK21, &WG21, &WGK21)
}

/// 15-point panel: (value, error estimate). Uses 15 integrand evaluations.
pub(crate) fn gk15<T: Real, F: Fn(T) -> T>(f: &F, a: T, b: T) -> (T, T) {
    gk_panel(f, a, b, &XGK15, &WG15, &WGK15)
}

pub(crate) const GK21_EVALS: usize = 21;
pub(crate) const GK15_EVALS: usize = 15;
