//! Record persistence. One JSON document per record; the directory store
//! writes each one to a temporary file and renames it into place.

use std::collections::{BTreeMap, HashMap};
use std::fs::{self, File};
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, RwLock};

use thiserror::Error;

use crate::records::Record;

pub const MAX_ID_LEN: usize = 128;
const TMP_SUFFIX: &str = ".tmp";

#[derive(Debug, Error)]
pub enum StoreError {
    #[error("store I/O on `{path}`: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("corrupt record `{collection}/{id}`: {source}")]
    Corrupt {
        collection: &'static str,
        id: String,
        #[source]
        source: serde_json::Error,
    },
    #[error("`{collection}/{id}` already exists")]
    AlreadyExists { collection: &'static str, id: String },
    #[error("invalid record id `{0}`: use 1-128 characters from [A-Za-z0-9._-], not starting with `.`")]
    InvalidId(String),
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> StoreError + '_ {
    move |source| StoreError::Io { path: path.to_path_buf(), source }
}

/// Ids double as file names, so they are restricted to a safe alphabet.
pub fn check_id(id: &str) -> Result<(), StoreError> {
    let ok = !id.is_empty()
        && id.len() <= MAX_ID_LEN
        && !id.starts_with('.')
        && id.chars().all(|c| c.is_ascii_alphanumeric() || matches!(c, '.' | '_' | '-'));
    if ok {
        Ok(())
    } else {
        Err(StoreError::InvalidId(id.to_string()))
    }
}

/// Byte-level record storage. Listings are sorted by id; a read after a
/// completed write in the same process sees that write.
pub trait Store: Send + Sync {
    /// Writes a new record, failing if the id is taken.
    fn insert_raw(&self, collection: &'static str, id: &str, doc: &[u8]) -> Result<(), StoreError>;
    /// Writes a record, replacing any previous version.
    fn put_raw(&self, collection: &'static str, id: &str, doc: &[u8]) -> Result<(), StoreError>;
    fn get_raw(&self, collection: &'static str, id: &str) -> Result<Option<Vec<u8>>, StoreError>;
    fn list_raw(&self, collection: &'static str) -> Result<Vec<(String, Vec<u8>)>, StoreError>;
    /// Short name for health reports.
    fn kind(&self) -> &'static str;
}

fn encode<R: Record>(record: &R) -> Result<Vec<u8>, StoreError> {
    check_id(record.id())?;
    let mut doc = serde_json::to_vec_pretty(record).map_err(|source| StoreError::Corrupt {
        collection: R::COLLECTION,
        id: record.id().into(),
        source,
    })?;
    doc.push(b'\n');
    Ok(doc)
}

fn decode<R: Record>(id: &str, doc: &[u8]) -> Result<R, StoreError> {
    serde_json::from_slice(doc).map_err(|source| StoreError::Corrupt {
        collection: R::COLLECTION,
        id: id.into(),
        source,
    })
}

/// Typed access on top of [`Store`].
pub trait StoreExt: Store {
    fn insert<R: Record>(&self, record: &R) -> Result<(), StoreError> {
        self.insert_raw(R::COLLECTION, record.id(), &encode(record)?)
    }

    fn put<R: Record>(&self, record: &R) -> Result<(), StoreError> {
        self.put_raw(R::COLLECTION, record.id(), &encode(record)?)
    }

    fn get<R: Record>(&self, id: &str) -> Result<Option<R>, StoreError> {
        if check_id(id).is_err() {
            return Ok(None);
        }
        self.get_raw(R::COLLECTION, id)?.map(|doc| decode(id, &doc)).transpose()
    }

    fn list<R: Record>(&self) -> Result<Vec<R>, StoreError> {
        self.list_raw(R::COLLECTION)?.into_iter().map(|(id, doc)| decode(&id, &doc)).collect()
    }
}

impl<S: Store + ?Sized> StoreExt for S {}

#[derive(Default)]
pub struct MemoryStore {
    collections: RwLock<HashMap<&'static str, BTreeMap<String, Vec<u8>>>>,
}

impl MemoryStore {
    pub fn new() -> Self {
        Self::default()
    }
}

impl Store for MemoryStore {
    fn insert_raw(&self, collection: &'static str, id: &str, doc: &[u8]) -> Result<(), StoreError> {
        check_id(id)?;
        let mut all = self.collections.write().expect("store lock poisoned");
        let records = all.entry(collection).or_default();
        if records.contains_key(id) {
            return Err(StoreError::AlreadyExists { collection, id: id.into() });
        }
        records.insert(id.into(), doc.to_vec());
        Ok(())
    }

    fn put_raw(&self, collection: &'static str, id: &str, doc: &[u8]) -> Result<(), StoreError> {
        check_id(id)?;
        self.collections
            .write()
            .expect("store lock poisoned")
            .entry(collection)
            .or_default()
            .insert(id.into(), doc.to_vec());
        Ok(())
    }

    fn get_raw(&self, collection: &'static str, id: &str) -> Result<Option<Vec<u8>>, StoreError> {
        Ok(self.collections.read().expect("store lock poisoned").get(collection).and_then(|c| c.get(id)).cloned())
    }

    fn list_raw(&self, collection: &'static str) -> Result<Vec<(String, Vec<u8>)>, StoreError> {
        let all = self.collections.read().expect("store lock poisoned");
        Ok(all.get(collection).map(|c| c.iter().map(|(k, v)| (k.clone(), v.clone())).collect()).unwrap_or_default())
    }

    fn kind(&self) -> &'static str {
        "memory"
    }
}

/// Writes `bytes` to `path` through a temporary sibling and a rename.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> io::Result<()> {
    write_atomic_with(path, bytes, |_| Ok(()))
}

/// [`write_atomic`] with `before_rename` called once the temporary file is
/// synced. An error from the hook stops the write there, leaving the
/// temporary file behind exactly as a crash at that point would.
pub fn write_atomic_with(
    path: &Path,
    bytes: &[u8],
    before_rename: impl FnOnce(&Path) -> io::Result<()>,
) -> io::Result<()> {
    let dir = path.parent().ok_or_else(|| io::Error::new(io::ErrorKind::InvalidInput, "path has no parent"))?;
    let name = path.file_name().ok_or_else(|| io::Error::new(io::ErrorKind::InvalidInput, "path has no file name"))?;
    let tmp = dir.join(format!(".{}.{}{TMP_SUFFIX}", name.to_string_lossy(), uuid::Uuid::new_v4().simple()));

    let written = File::create(&tmp).and_then(|mut f| {
        f.write_all(bytes)?;
        f.sync_all()
    });
    if let Err(e) = written {
        let _ = fs::remove_file(&tmp);
        return Err(e);
    }
    before_rename(&tmp)?;
    if let Err(e) = fs::rename(&tmp, path) {
        let _ = fs::remove_file(&tmp);
        return Err(e);
    }
    // Persist the rename itself; not every platform lets a directory be opened.
    if let Ok(d) = File::open(dir) {
        let _ = d.sync_all();
    }
    Ok(())
}

type WriteHook = dyn Fn(&Path) -> io::Result<()> + Send + Sync;
type RecordLocks = HashMap<(&'static str, String), Arc<Mutex<()>>>;

/// `<root>/<collection>/<id>.json`. Writes to one record id are serialized;
/// distinct ids proceed in parallel.
pub struct DirStore {
    root: PathBuf,
    locks: Mutex<RecordLocks>,
    hook: Option<Arc<WriteHook>>,
}

impl DirStore {
    pub fn open(root: impl Into<PathBuf>) -> Result<Self, StoreError> {
        let root = root.into();
        fs::create_dir_all(&root).map_err(io_err(&root))?;
        Ok(Self { root, locks: Mutex::new(HashMap::new()), hook: None })
    }

    /// Runs `hook` between writing and renaming every record, for fault
    /// injection.
    pub fn with_write_hook(mut self, hook: impl Fn(&Path) -> io::Result<()> + Send + Sync + 'static) -> Self {
        self.hook = Some(Arc::new(hook));
        self
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    pub fn record_path(&self, collection: &str, id: &str) -> PathBuf {
        self.root.join(collection).join(format!("{id}.json"))
    }

    fn lock(&self, collection: &'static str, id: &str) -> Arc<Mutex<()>> {
        let mut locks = self.locks.lock().expect("lock table poisoned");
        locks.entry((collection, id.to_string())).or_default().clone()
    }

    fn write(&self, collection: &'static str, id: &str, doc: &[u8], create_only: bool) -> Result<(), StoreError> {
        check_id(id)?;
        let dir = self.root.join(collection);
        fs::create_dir_all(&dir).map_err(io_err(&dir))?;
        let path = self.record_path(collection, id);
        let lock = self.lock(collection, id);
        let _guard = lock.lock().expect("record lock poisoned");
        if create_only && path.exists() {
            return Err(StoreError::AlreadyExists { collection, id: id.into() });
        }
        let result = match &self.hook {
            Some(hook) => write_atomic_with(&path, doc, |tmp| hook(tmp)),
            None => write_atomic(&path, doc),
        };
        result.map_err(io_err(&path))
    }
}

impl Store for DirStore {
    fn insert_raw(&self, collection: &'static str, id: &str, doc: &[u8]) -> Result<(), StoreError> {
        self.write(collection, id, doc, true)
    }

    fn put_raw(&self, collection: &'static str, id: &str, doc: &[u8]) -> Result<(), StoreError> {
        self.write(collection, id, doc, false)
    }

    fn get_raw(&self, collection: &'static str, id: &str) -> Result<Option<Vec<u8>>, StoreError> {
        check_id(id)?;
        let path = self.record_path(collection, id);
        match fs::read(&path) {
            Ok(doc) => Ok(Some(doc)),
            Err(e) if e.kind() == io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(io_err(&path)(e)),
        }
    }

    fn list_raw(&self, collection: &'static str) -> Result<Vec<(String, Vec<u8>)>, StoreError> {
        let dir = self.root.join(collection);
        let entries = match fs::read_dir(&dir) {
            Ok(entries) => entries,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(io_err(&dir)(e)),
        };
        let mut ids = Vec::new();
        for entry in entries {
            let name = entry.map_err(io_err(&dir))?.file_name();
            let Some(id) = name.to_str().and_then(|n| n.strip_suffix(".json")) else { continue };
            if check_id(id).is_ok() {
                ids.push(id.to_string());
            }
        }
        ids.sort();
        ids.into_iter()
            .filter_map(|id| match self.get_raw(collection, &id) {
                Ok(Some(doc)) => Some(Ok((id, doc))),
                // Removed between listing and reading.
                Ok(None) => None,
                Err(e) => Some(Err(e)),
            })
            .collect()
    }

    fn kind(&self) -> &'static str {
        "directory"
    }
}
