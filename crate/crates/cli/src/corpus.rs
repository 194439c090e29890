//! Bundled input documents.

pub const SPHERE2: &str = include_str!("../corpus/sphere2.json");
pub const SPHERE3: &str = include_str!("../corpus/sphere3.json");
pub const SPHERE5: &str = include_str!("../corpus/sphere5.json");
pub const S2_X_S3: &str = include_str!("../corpus/s2xs3.json");
pub const N: &str = include_str!("../corpus/n.json");
pub const N_PERTURBED: &str = include_str!("../corpus/n_perturbed.json");
pub const WEAK: &str = include_str!("../corpus/weak.json");
pub const IDENTITY_S3: &str = include_str!("../corpus/identity_s3.json");
pub const TRIVIAL_S5_S3: &str = include_str!("../corpus/trivial_s5_s3.json");

/// The coherent, strictly coassociative coalgebra documents.
pub fn coalgebras() -> Vec<(&'static str, &'static str)> {
    vec![
        ("S2", SPHERE2),
        ("S3", SPHERE3),
        ("S5", SPHERE5),
        ("S2xS3", S2_X_S3),
        ("N", N),
    ]
}
