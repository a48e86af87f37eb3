/// Cell counts of a product complex: `(a ⋆ b)[k] = Σ_{i+j=k} a[i]·b[j]`.
pub fn product_cell_counts(base: &[u64], fiber: &[u64]) -> Vec<u64> {
    if base.is_empty() || fiber.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; base.len() + fiber.len() - 1];
    for (i, a) in base.iter().enumerate() {
        for (j, b) in fiber.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}
