"""Base Repository - Clase base para los repositorios de archivos."""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Generic, Optional, TypeVar, Union

T = TypeVar("T")

PathLike = Union[str, Path]


class BaseRepository(ABC, Generic[T]):
    """Repositorio base: resuelve rutas relativas a un directorio de capa."""

    def __init__(self, base_path: Optional[Path] = None) -> None:
        """Inicializa el repositorio con el directorio base (bronze/silver/gold)."""
        self.base_path = base_path

    def resolve(self, path: PathLike) -> Path:
        """Las rutas absolutas se respetan; las relativas cuelgan de base_path."""
        p = Path(path)
        if p.is_absolute() or self.base_path is None:
            return p
        return self.base_path / p

    def prepare(self, path: PathLike) -> Path:
        """Resuelve la ruta y crea el directorio padre."""
        target = self.resolve(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        return target

    def exists(self, path: PathLike) -> bool:
        return self.resolve(path).exists()

    @abstractmethod
    def load(self, path: PathLike) -> T:
        """Lee un objeto desde disco."""

    @abstractmethod
    def save(self, obj: T, path: PathLike) -> Path:
        """Escribe un objeto a disco y retorna la ruta final."""
