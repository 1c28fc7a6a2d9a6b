use crate::exact::Canonical;

/// Both sides of an identity, evaluated independently.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness<T> {
    pub lhs: T,
    pub rhs: T,
}

impl<T: PartialEq> Witness<T> {
    pub fn new(lhs: T, rhs: T) -> Self {
        Self { lhs, rhs }
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

impl<T: Canonical> Witness<T> {
    /// Canonical text of both sides, for failure reports.
    pub fn render(&self) -> (String, String) {
        (self.lhs.to_text(), self.rhs.to_text())
    }
}
