"""WSDL Parser - Extracción de operaciones y nombres de parámetros desde WSDL."""

import logging
from pathlib import Path
from typing import Dict, List, Optional, Union

from lxml import etree

from core.exceptions import EmptyServiceError, WsdlParseError, WsdlStructureError
from domain import NameSource, Operation, Parameter, ServiceDescription
from domain.naming import make_parameter

logger = logging.getLogger(__name__)

WSDL11_NS = "http://schemas.xmlsoap.org/wsdl/"
WSDL20_NS = "http://www.w3.org/ns/wsdl"
XSD_NS = "http://www.w3.org/2001/XMLSchema"


def _w11(tag: str) -> str:
    return f"{{{WSDL11_NS}}}{tag}"


def _w20(tag: str) -> str:
    return f"{{{WSDL20_NS}}}{tag}"


def _xsd(tag: str) -> str:
    return f"{{{XSD_NS}}}{tag}"


def _local(qname: Optional[str]) -> str:
    """'tns:Foo' -> 'Foo'."""
    if not qname:
        return ""
    return qname.rsplit(":", 1)[-1]


class WsdlParser:
    """
    Parser de WSDL 1.1 (portType/message/part) y WSDL 2.0 (interface).

    Sólo interesan los nombres: bindings, detalles SOAP y anotaciones SAWSDL
    se ignoran.
    """

    def __init__(
        self,
        name_source: NameSource = NameSource.ELEMENT,
        fold_case: bool = False,
        base_dir: Optional[Path] = None,
    ) -> None:
        """
        Inicializa el parser.

        Args:
            name_source: Regla para el nombre del parámetro (part|element|qualified)
            fold_case: Pasar los nombres a minúsculas al normalizar
            base_dir: Directorio para resolver xsd:import locales
        """
        self.name_source = NameSource(name_source)
        self.fold_case = fold_case
        self.base_dir = base_dir
        self._xml_parser = etree.XMLParser(
            resolve_entities=False,
            no_network=True,
            remove_comments=True,
        )

    # ==================== API ====================

    def parse(self, document: Union[str, bytes], service_id: Optional[str] = None) -> ServiceDescription:
        """
        Parsea un documento WSDL y retorna su ServiceDescription.

        Raises:
            WsdlParseError: XML mal formado (incluye línea y columna)
            WsdlStructureError: Operación que referencia un mensaje inexistente
            EmptyServiceError: El documento no declara operaciones
        """
        root = self._parse_xml(document)

        if root.tag == _w11("definitions"):
            operations = self._operations_wsdl11(root)
        elif root.tag == _w20("description"):
            operations = self._operations_wsdl20(root)
        else:
            raise WsdlStructureError(f"el elemento raíz no es WSDL: {root.tag}")

        service_el = root.find(_w11("service"))
        if service_el is None:
            service_el = root.find(_w20("service"))
        service_name = root.get("name") or (service_el.get("name") if service_el is not None else None)
        sid = service_id or service_name or "service"

        if not operations:
            raise EmptyServiceError(f"el servicio '{sid}' no declara operaciones")

        return ServiceDescription(id=sid, name=service_name or sid, operations=tuple(operations))

    # ==================== XML ====================

    def _parse_xml(self, document: Union[str, bytes]) -> etree._Element:
        data = document.encode("utf-8") if isinstance(document, str) else document
        try:
            return etree.fromstring(data, parser=self._xml_parser)
        except etree.XMLSyntaxError as e:
            line, column = e.position if e.position else (None, None)
            raise WsdlParseError(f"XML mal formado: {e.msg}", line=line, column=column) from e

    def _schemas(self, root: etree._Element) -> List[etree._Element]:
        """Esquemas inline más los xsd:import/include locales (nunca por red)."""
        schemas = list(root.iter(_xsd("schema")))
        pending = list(schemas)
        seen: set = set()
        while pending and self.base_dir is not None:
            schema = pending.pop()
            for ref in schema.findall(_xsd("import")) + schema.findall(_xsd("include")):
                location = ref.get("schemaLocation")
                if not location or "://" in location:
                    continue
                path = (self.base_dir / location).resolve()
                if path in seen or not path.is_file():
                    continue
                seen.add(path)
                try:
                    imported = etree.parse(str(path), parser=self._xml_parser).getroot()
                except etree.XMLSyntaxError as e:
                    logger.warning(f"⚠ XSD importado ilegible {path}: {e}")
                    continue
                schemas.append(imported)
                pending.append(imported)
        return schemas

    def _element_types(self, root: etree._Element) -> Dict[str, str]:
        types: Dict[str, str] = {}
        for schema in self._schemas(root):
            for el in schema.findall(_xsd("element")):
                if el.get("name"):
                    types[el.get("name")] = _local(el.get("type")) or "complex"
        return types

    def _parameter(self, base: str, message: str, context: str) -> Parameter:
        if self.name_source == NameSource.QUALIFIED:
            raw = f"{message}_{base}"
        else:
            raw = base
        return make_parameter(raw, self.fold_case, path=context)

    # ==================== WSDL 1.1 ====================

    def _operations_wsdl11(self, root: etree._Element) -> List[Operation]:
        messages = {m.get("name"): m for m in root.findall(_w11("message"))}
        element_types = self._element_types(root)

        operations: List[Operation] = []
        for port_type in root.findall(_w11("portType")):
            for op_el in port_type.findall(_w11("operation")):
                op_name = op_el.get("name") or ""
                inputs = self._message_parameters11(op_el.find(_w11("input")), op_name, messages, element_types)
                outputs = self._message_parameters11(op_el.find(_w11("output")), op_name, messages, element_types)
                operations.append(Operation(name=op_name, inputs=tuple(inputs), outputs=tuple(outputs)))
        return operations

    def _message_parameters11(
        self,
        io_el: Optional[etree._Element],
        op_name: str,
        messages: Dict[str, etree._Element],
        element_types: Dict[str, str],
    ) -> List[Parameter]:
        if io_el is None:
            return []
        message_name = _local(io_el.get("message"))
        message = messages.get(message_name)
        if message is None:
            raise WsdlStructureError(
                f"la operación '{op_name}' referencia el mensaje inexistente '{message_name}'",
                operation=op_name,
            )

        parts = message.findall(_w11("part"))
        if not parts:
            logger.warning(f"⚠ Mensaje sin partes: {message_name} (operación {op_name})")

        params = []
        for part in parts:
            part_name = part.get("name") or ""
            element = _local(part.get("element"))
            if self.name_source == NameSource.PART or not element:
                base = part_name
            else:
                base = element
            if element and element not in element_types and element_types:
                logger.debug(f"Elemento {element} no declarado en los esquemas disponibles")
            data_type = _local(part.get("type")) or element_types.get(element, "")
            logger.debug(f"  {op_name}/{message_name}: {base} ({data_type or '?'})")
            params.append(self._parameter(base, message_name, f"{op_name}/{message_name}/{part_name}"))
        return params

    # ==================== WSDL 2.0 ====================

    def _operations_wsdl20(self, root: etree._Element) -> List[Operation]:
        operations: List[Operation] = []
        for interface in root.findall(_w20("interface")):
            for op_el in interface.findall(_w20("operation")):
                op_name = op_el.get("name") or ""
                inputs = self._element_parameters20(op_el.findall(_w20("input")), op_name)
                outputs = self._element_parameters20(op_el.findall(_w20("output")), op_name)
                operations.append(Operation(name=op_name, inputs=tuple(inputs), outputs=tuple(outputs)))
        return operations

    def _element_parameters20(self, io_els: List[etree._Element], op_name: str) -> List[Parameter]:
        params = []
        for io_el in io_els:
            element = io_el.get("element") or ""
            if not element or element.startswith("#"):
                continue
            params.append(self._parameter(_local(element), op_name, f"{op_name}/{element}"))
        return params


def parse_wsdl(
    document: Union[str, bytes],
    service_id: Optional[str] = None,
    name_source: NameSource = NameSource.ELEMENT,
    fold_case: bool = False,
    base_dir: Optional[Path] = None,
) -> ServiceDescription:
    """Atajo funcional sobre WsdlParser.parse."""
    parser = WsdlParser(name_source=name_source, fold_case=fold_case, base_dir=base_dir)
    return parser.parse(document, service_id=service_id)
