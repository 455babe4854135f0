use alloc::collections::BTreeMap;
use alloc::sync::Arc;

/// Thread-safe memo table. Values are computed outside the lock, so two
/// threads racing on the same key may both compute it; the first insert wins
/// and both observe equal values.
pub(crate) struct Memo<K, V> {
    inner: spin::Mutex<BTreeMap<K, Arc<V>>>,
}

impl<K: Ord + Clone, V> Memo<K, V> {
    pub(crate) const fn new() -> Self {
        Memo { inner: spin::Mutex::new(BTreeMap::new()) }
    }

    pub(crate) fn get_or_insert_with(&self, key: K, f: impl FnOnce() -> V) -> Arc<V> {
        if let Some(v) = self.inner.lock().get(&key) {
            return v.clone();
        }
        let value = Arc::new(f());
        self.inner.lock().entry(key).or_insert(value).clone()
    }

    pub(crate) fn try_get_or_insert_with<E>(
        &self,
        key: K,
        f: impl FnOnce() -> Result<V, E>,
    ) -> Result<Arc<V>, E> {
        if let Some(v) = self.inner.lock().get(&key) {
            return Ok(v.clone());
        }
        let value = Arc::new(f()?);
        Ok(self.inner.lock().entry(key).or_insert(value).clone())
    }
}
