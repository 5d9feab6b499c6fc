use magma_core::OrderedMagma;
use order_core::{ElementId, Error, Result};

use crate::closure::enumerate_closures;
use crate::map::MonotoneMap;
use crate::nucleus::is_nucleus;

/// How `enumerate_nuclei_with` decides which closures are nuclei.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NucleusRoute {
    /// Image closed under the residuals that exist, cross-checked against the filter.
    ImageSets,
    /// Run `is_nucleus` on every closure.
    Filter,
}

/// Whether `image` is closed under `x/y` and `y\x` for `x` in the image,
/// wherever those residuals exist.
pub fn image_closed_under_residuals(m: &OrderedMagma, image: &[ElementId]) -> bool {
    let mut member = vec![false; m.size()];
    for &x in image {
        member[x] = true;
    }
    image.iter().all(|&x| {
        m.elements().all(|y| {
            m.residual_left(x, y).map_or(true, |r| member[r])
                && m.residual_right(y, x).map_or(true, |r| member[r])
        })
    })
}

/// All nuclei of `m`, sorted by table.  Uses the image-set criterion when
/// the carrier is bounded complete and near residuated.
pub fn enumerate_nuclei(m: &OrderedMagma) -> Result<Vec<MonotoneMap>> {
    let route = if m.poset().flags().bounded_complete && m.is_near_residuated() {
        NucleusRoute::ImageSets
    } else {
        NucleusRoute::Filter
    };
    enumerate_nuclei_with(m, route)
}

pub fn enumerate_nuclei_with(m: &OrderedMagma, route: NucleusRoute) -> Result<Vec<MonotoneMap>> {
    let closures = enumerate_closures(m.poset())?;
    match route {
        NucleusRoute::Filter => Ok(closures
            .into_iter()
            .filter(|s| is_nucleus(m, s.as_slice()))
            .collect()),
        NucleusRoute::ImageSets => {
            if !(m.poset().flags().bounded_complete && m.is_near_residuated()) {
                return Err(Error::hypothesis(
                    "the image-set criterion needs a bounded complete near residuated carrier",
                ));
            }
            let mut out = Vec::new();
            for s in closures {
                let by_image = image_closed_under_residuals(m, &s.image());
                if by_image != is_nucleus(m, s.as_slice()) {
                    return Err(Error::internal(format!(
                        "image-set criterion disagrees with the nucleus filter on {s}"
                    )));
                }
                if by_image {
                    out.push(s);
                }
            }
            Ok(out)
        }
    }
}
