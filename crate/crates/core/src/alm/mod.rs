//! Active Learning Method modeling: project each input against the output, diffuse the
//! samples on that plane, and extract a narrow path of per-column delegates.

mod dataset;
mod model;
mod path;
mod plane;

pub use dataset::{Dataset, Sample};
pub use model::{fit, fit_plane, Diffusion, Extraction, FitConfig, MisoModel, SisoFit};
pub use path::{
    cog_extract, cog_merge, morph_extract, path_confidence, runs_to_columns, thicken_and_thin,
    thickened_skeleton, Delegate, MorphParams, NarrowPath, WeightedPoint,
};
pub use plane::{ids_spread, project, radius_in_cells, stamp, stamp_all, DataPlane, Range, Source};
