use std::fmt;

/// Vertex identifier. Stores constructed with `n` vertices accept `0..n`.
pub type VertexId = u32;

/// An ordered vertex pair packed into one 64-bit word: source in the high
/// half, target in the low half.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct EdgeCode(pub u64);

impl EdgeCode {
    #[inline]
    pub fn new(x: VertexId, y: VertexId) -> Self {
        pack_edge(x, y)
    }

    #[inline]
    pub fn source(self) -> VertexId {
        (self.0 >> 32) as VertexId
    }

    #[inline]
    pub fn target(self) -> VertexId {
        self.0 as VertexId
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for EdgeCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.source(), self.target())
    }
}

/// Packs `(x, y)` as `x * 2^32 + y`. No range validation happens here.
#[inline]
pub fn pack_edge(x: VertexId, y: VertexId) -> EdgeCode {
    EdgeCode((u64::from(x) << 32) | u64::from(y))
}

#[inline]
pub fn unpack_edge(code: EdgeCode) -> (VertexId, VertexId) {
    (code.source(), code.target())
}
