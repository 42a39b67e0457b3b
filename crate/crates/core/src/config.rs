use crate::{GraphError, HashMode};

/// Smallest slot capacity any hashed store will allocate.
pub const MIN_CAPACITY: usize = 16;

/// Largest slot capacity: slot indices are `u32` and `u32::MAX` is the
/// chain sentinel.
pub(crate) const MAX_CAPACITY: usize = 1 << 31;

/// Sizing and hashing parameters shared by [`EdgeHash`](crate::EdgeHash) and
/// [`HashList`](crate::HashList).
#[derive(Debug, Clone, PartialEq)]
pub struct StoreConfig {
    pub vertex_count: u32,
    pub expected_edges: usize,
    /// Load factor the initial capacity is sized for.
    pub max_load_factor: f64,
    /// Occupancy ratio that an insertion may not exceed before the table doubles.
    pub growth_threshold: f64,
    pub growth_enabled: bool,
    pub hash_mode: HashMode,
    /// Allocate the parallel weight array (HashList only).
    pub weights: bool,
}

impl StoreConfig {
    pub fn new(vertex_count: u32, expected_edges: usize) -> Self {
        StoreConfig {
            vertex_count,
            expected_edges,
            max_load_factor: 0.5,
            growth_threshold: 0.7,
            growth_enabled: true,
            hash_mode: HashMode::Mixer,
            weights: false,
        }
    }

    pub fn max_load_factor(mut self, alpha: f64) -> Self {
        self.max_load_factor = alpha;
        self
    }

    pub fn growth_threshold(mut self, threshold: f64) -> Self {
        self.growth_threshold = threshold;
        self
    }

    pub fn growth(mut self, enabled: bool) -> Self {
        self.growth_enabled = enabled;
        self
    }

    pub fn hash_mode(mut self, mode: HashMode) -> Self {
        self.hash_mode = mode;
        self
    }

    pub fn weights(mut self, enabled: bool) -> Self {
        self.weights = enabled;
        self
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        let bad = |msg: String| Err(GraphError::InvalidConfig(msg));
        if self.vertex_count == 0 {
            return bad("vertex_count must be positive".into());
        }
        if self.expected_edges == 0 {
            return bad("expected_edges must be positive".into());
        }
        let alpha = self.max_load_factor;
        let threshold = self.growth_threshold;
        if !(alpha > 0.0 && alpha < 1.0) {
            return bad(format!("max_load_factor {alpha} not in (0, 1)"));
        }
        if !(threshold > 0.0 && threshold < 1.0) {
            return bad(format!("growth_threshold {threshold} not in (0, 1)"));
        }
        if alpha >= threshold {
            return bad(format!(
                "max_load_factor {alpha} must be below growth_threshold {threshold}"
            ));
        }
        if (self.expected_edges as f64 / alpha) > MAX_CAPACITY as f64 {
            return bad(format!(
                "expected_edges {} needs more than 2^31 slots",
                self.expected_edges
            ));
        }
        Ok(())
    }

    /// Smallest power of two at or above `expected_edges / max_load_factor`,
    /// and at least [`MIN_CAPACITY`].
    pub fn initial_capacity(&self) -> usize {
        let wanted = (self.expected_edges as f64 / self.max_load_factor).ceil() as usize;
        wanted.next_power_of_two().max(MIN_CAPACITY)
    }
}
