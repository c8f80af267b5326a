//! Reference values from `tests/oracle/golden.py` (60-digit truncated products
//! and mpmath polylog), frozen here.

#![allow(clippy::excessive_precision)]

pub const DILOG_HALF: f64 = 0.5822405264650125059026563;
pub const QPOCH_HALF_HALF: f64 = 0.2887880950866024212788997;
pub const LOG_QPOCH_HALF_HALF: f64 = -1.242062094812414945797845;
pub const QPOCH_QUARTER_QUARTER: f64 = 0.6885375371203397154565144;
pub const QPOCH_HALF_QUARTER: f64 = 0.4194224417951075977099561;
pub const LOG_GAMMA_Q_SUB_HALF_HALF: f64 = 0.4523695117205561777078938;
pub const LOG_GAMMA_Q_SUPER_HALF_TWO: f64 = 0.7122997044305356687393559;
pub const LOG_C_Q_TWO: f64 = -1.299824359859077054915948;
pub const LOG_C_Q_ONE_HALF: f64 = -3.642547259037418412171102;
pub const LOG_C_Q_TEN: f64 = -0.2581348176611255446182019;
pub const THETA4_SERIES_ZERO_HALF: f64 = 0.1211242080025805024608493;
pub const THETA4_PRODUCT_03_HALF: f64 = 0.02889714560103075295892392;
pub const LOG_THETA4_034_HALF: f64 = -5.457763474553830539797766;
pub const LOG_THETA1_M03_HALF: f64 = -2.130255976694898740216713;
pub const THETA1_MODULUS_M03_HALF: f64 = 0.1348566695170976964212044;
pub const RHS_SUB_HALF_ZERO: f64 = 0.7845025357388633051369844;
pub const RHS_SUPER_TWO_ONE: f64 = -0.1132552494434516020942252;
pub const RHS_SUPER_ALT_ONE_HALF_HALF: f64 = 0.08109749410859278157469233;
pub const RHS_SUPER_SPECIAL_TEN: f64 = 1.504593517905270929772756;
pub const RHS_THETA_02: f64 = 1.713318994593164818882556;
pub const RHS_THETA_HALF: f64 = 1.903606503903191023174149;
pub const RHS_THETA_08: f64 = 2.168181166184087125108279;
