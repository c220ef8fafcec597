/// Resource caps shared by the exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest graph whose automorphism group is computed.
    pub vertex_cap: usize,
    /// Largest number of vertex maps an exhaustive enumeration may visit.
    pub enumeration_budget: u64,
    /// Largest number of search nodes a homomorphism or automorphism search may expand.
    pub search_budget: u64,
}

impl Limits {
    pub const DEFAULT_VERTEX_CAP: usize = 12;
    pub const DEFAULT_ENUMERATION_BUDGET: u64 = 100_000_000;
    pub const DEFAULT_SEARCH_BUDGET: u64 = 100_000_000;
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            vertex_cap: Self::DEFAULT_VERTEX_CAP,
            enumeration_budget: Self::DEFAULT_ENUMERATION_BUDGET,
            search_budget: Self::DEFAULT_SEARCH_BUDGET,
        }
    }
}
