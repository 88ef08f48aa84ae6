/// Caps that keep the exhaustive parts of the library at desk scale.
///
/// Every operation that scans a box, enumerates subsets or runs a
/// permutation search checks the relevant field and fails with
/// [`Error::CapExceeded`](crate::Error::CapExceeded) instead of running away.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest dimension in which a bounding box is scanned.
    pub max_dim: usize,
    /// Largest number of integer points in a scanned bounding box.
    pub max_box_volume: u64,
    /// Largest number of generator subsets examined during facet enumeration.
    pub max_facet_subsets: u64,
    /// Largest graph handed to exact coloring.
    pub exact_coloring_cap: usize,
    /// Largest graph handed to the difference-graph ordering search.
    pub difference_search_cap: usize,
    /// Node budget shared by the exhaustive subset and point-set searches.
    pub search_budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_dim: 8,
            max_box_volume: 1 << 22,
            max_facet_subsets: 2_000_000,
            exact_coloring_cap: 24,
            difference_search_cap: 10,
            search_budget: 50_000_000,
        }
    }
}
